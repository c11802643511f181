#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "sdlab/linalg.hpp"

namespace sdlab {

/// rms of the residual b - A x, i.e. ||b - A x|| / sqrt(N).
[[nodiscard]] double sigma_res(const DenseMatrix& A, const Vector& b, const Vector& x);

/// Euclidean distance ||x - s||.
[[nodiscard]] double d_soln(const Vector& x, const Vector& s);

/// rms of the componentwise deviations x_j - s_j, so that
/// d_soln(x, s) == sigma_dx(x, s) * sqrt(N) up to rounding.
[[nodiscard]] double sigma_dx(const Vector& x, const Vector& s);

enum class MetricName { sigma_res_norm, d_soln_norm };

[[nodiscard]] std::string_view to_string(MetricName m) noexcept;
[[nodiscard]] MetricName parse_metric_name(std::string_view text);

/// A metric divided by its initial value; values[0] == 1.
struct MetricSeries {
    MetricName name = MetricName::sigma_res_norm;
    std::vector<double> values;
};

/// Divides raw by raw[0]. Throws AlreadySolved when raw[0] == 0.
[[nodiscard]] MetricSeries normalize_series(std::span<const double> raw,
                                            MetricName name = MetricName::sigma_res_norm);

}  // namespace sdlab
