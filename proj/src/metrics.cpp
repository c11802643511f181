#include "sdlab/metrics.hpp"

#include <cmath>
#include <string>

#include "sdlab/errors.hpp"

namespace sdlab {

double sigma_res(const DenseMatrix& A, const Vector& b, const Vector& x) {
    const Vector r = b - matvec(A, x);
    return norm(r) / std::sqrt(static_cast<double>(r.size()));
}

double d_soln(const Vector& x, const Vector& s) { return norm(x - s); }

double sigma_dx(const Vector& x, const Vector& s) {
    if (x.size() != s.size()) throw ContractViolation("sigma_dx: dimension mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - s[j];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(x.size()));
}

std::string_view to_string(MetricName m) noexcept {
    switch (m) {
        case MetricName::sigma_res_norm: return "sigma_res_norm";
        case MetricName::d_soln_norm: return "d_soln_norm";
    }
    return "unknown";
}

MetricName parse_metric_name(std::string_view text) {
    if (text == "sigma_res_norm") return MetricName::sigma_res_norm;
    if (text == "d_soln_norm") return MetricName::d_soln_norm;
    throw ConfigError("unknown metric '" + std::string(text) + "'");
}

MetricSeries normalize_series(std::span<const double> raw, MetricName name) {
    if (raw.empty()) throw ContractViolation("normalize_series: empty series");
    if (raw[0] == 0.0) {
        throw AlreadySolved("normalize_series: initial value is zero, starting point is the solution");
    }
    MetricSeries out{name, {}};
    out.values.reserve(raw.size());
    const double base = raw[0];
    for (const double v : raw) out.values.push_back(v / base);
    out.values[0] = 1.0;
    return out;
}

}  // namespace sdlab
