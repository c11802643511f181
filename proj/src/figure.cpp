#include "sdlab/figure.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <string_view>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kPlotLeft = 80.0;
constexpr double kPlotRight = 600.0;
constexpr double kPlotTop = 50.0;
constexpr double kPlotBottom = 420.0;

std::string fixed2(double v) {
    std::array<char, 48> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
    if (ec != std::errc{}) return "0.00";
    std::string s(buf.data(), ptr);
    return s == "-0.00" ? "0.00" : s;
}

std::string tick_text(double v) {
    std::array<char, 48> buf{};
    if (std::abs(v) < 1e-12) v = 0.0;
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : "?";
}

std::string_view color_of(Algorithm a) {
    switch (a) {
        case Algorithm::alg1: return "#1f77b4";
        case Algorithm::alg2: return "#d62728";
        case Algorithm::alg3: return "#2ca02c";
    }
    return "#000000";
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Smallest of {1, 2, 5} x 10^e that is >= raw.
double nice_step(double raw) {
    if (!(raw > 0.0)) return 1.0;
    const double base = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * base >= raw * (1.0 - 1e-12)) return m * base;
    }
    return 10.0 * base;
}

struct Line {
    Algorithm algorithm;
    std::size_t trial;
    std::vector<double> y;  // already log10 when log_y
};

struct Axis {
    double lo;
    double hi;
    double step;
};

Axis y_axis(double ymin, double ymax, bool log_y) {
    if (log_y) {
        double lo = std::floor(ymin);
        double hi = std::ceil(ymax);
        if (hi <= lo) hi = lo + 1.0;
        const double step = std::max(1.0, std::ceil((hi - lo) / 10.0));
        hi = lo + std::ceil((hi - lo) / step) * step;
        return {lo, hi, step};
    }
    double lo = std::min(0.0, ymin);
    double hi = std::max(ymax, lo + 1e-12);
    const double step = nice_step((hi - lo) / 5.0);
    lo = std::floor(lo / step) * step;
    hi = std::ceil(hi / step) * step;
    if (hi <= lo) hi = lo + step;
    return {lo, hi, step};
}

}  // namespace

std::string render_svg(std::span<const TraceSeries> series, const FigureSpec& spec) {
    spec.validate();
    std::vector<Line> lines;
    std::set<Algorithm> clamped;
    std::set<Algorithm> present;
    for (const Algorithm a : spec.algorithms) {
        std::vector<const TraceSeries*> matching;
        for (const auto& s : series) {
            if (s.algorithm == a) matching.push_back(&s);
        }
        std::stable_sort(matching.begin(), matching.end(),
                         [](const TraceSeries* l, const TraceSeries* r) { return l->trial < r->trial; });
        for (const TraceSeries* s : matching) {
            Line line{a, s->trial, s->normalized(spec.y_metric)};
            if (spec.log_y) {
                for (double& v : line.y) {
                    if (!(v > 0.0)) {
                        v = kLogClampFloor;
                        clamped.insert(a);
                    }
                    v = std::log10(v);
                }
            }
            present.insert(a);
            lines.push_back(std::move(line));
        }
    }
    if (lines.empty()) throw ConfigError("figure: no traces match the requested algorithms");

    std::size_t kmax = 1;
    double ymin = lines.front().y.front();
    double ymax = ymin;
    for (const auto& l : lines) {
        kmax = std::max(kmax, l.y.size() - 1);
        for (const double v : l.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    const Axis ya = y_axis(ymin, ymax, spec.log_y);
    const double xstep = std::max(1.0, nice_step(static_cast<double>(kmax) / 10.0));
    const double xhi = std::ceil(static_cast<double>(kmax) / xstep) * xstep;

    auto px = [&](double k) { return kPlotLeft + (kPlotRight - kPlotLeft) * k / xhi; };
    auto py = [&](double v) {
        return kPlotBottom - (kPlotBottom - kPlotTop) * (v - ya.lo) / (ya.hi - ya.lo);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(kWidth) + "\" height=\"" +
           fixed2(kHeight) + "\" viewBox=\"0 0 " + fixed2(kWidth) + " " + fixed2(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (!spec.title.empty()) {
        svg += "<text x=\"" + fixed2((kPlotLeft + kPlotRight) / 2) +
               "\" y=\"28.00\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" +
               xml_escape(spec.title) + "</text>\n";
    }

    // Grid and tick labels.
    svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    const auto y_ticks = static_cast<long>(std::llround((ya.hi - ya.lo) / ya.step));
    for (long i = 0; i <= y_ticks; ++i) {
        const double v = ya.lo + static_cast<double>(i) * ya.step;
        const std::string y = fixed2(py(v));
        svg += "<line x1=\"" + fixed2(kPlotLeft) + "\" y1=\"" + y + "\" x2=\"" + fixed2(kPlotRight) +
               "\" y2=\"" + y + "\" stroke=\"#e0e0e0\"/>\n";
        const std::string label =
            spec.log_y ? (std::llround(v) == 0 ? "1" : "1e" + std::to_string(std::llround(v)))
                       : tick_text(v);
        svg += "<text x=\"" + fixed2(kPlotLeft - 6) + "\" y=\"" + fixed2(py(v) + 4) +
               "\" text-anchor=\"end\">" + label + "</text>\n";
    }
    const auto x_ticks = static_cast<long>(std::llround(xhi / xstep));
    for (long i = 0; i <= x_ticks; ++i) {
        const double k = static_cast<double>(i) * xstep;
        const std::string x = fixed2(px(k));
        svg += "<line x1=\"" + x + "\" y1=\"" + fixed2(kPlotBottom) + "\" x2=\"" + x + "\" y2=\"" +
               fixed2(kPlotBottom + 5) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + x + "\" y=\"" + fixed2(kPlotBottom + 18) +
               "\" text-anchor=\"middle\">" + tick_text(k) + "</text>\n";
    }
    svg += "</g>\n";

    svg += "<rect x=\"" + fixed2(kPlotLeft) + "\" y=\"" + fixed2(kPlotTop) + "\" width=\"" +
           fixed2(kPlotRight - kPlotLeft) + "\" height=\"" + fixed2(kPlotBottom - kPlotTop) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + fixed2((kPlotLeft + kPlotRight) / 2) + "\" y=\"" + fixed2(kHeight - 20) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">iteration k</text>\n";
    const std::string ylabel = std::string(to_string(spec.y_metric)) + (spec.log_y ? " (log10)" : "");
    svg += "<text x=\"20.00\" y=\"" + fixed2((kPlotTop + kPlotBottom) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20.00 " +
           fixed2((kPlotTop + kPlotBottom) / 2) + ")\">" + ylabel + "</text>\n";

    for (const auto& l : lines) {
        svg += "<polyline data-algorithm=\"" + std::string(to_string(l.algorithm)) +
               "\" data-trial=\"" + std::to_string(l.trial) + "\" fill=\"none\" stroke=\"" +
               std::string(color_of(l.algorithm)) + "\" stroke-width=\"1.2\" stroke-opacity=\"0.85\" points=\"";
        for (std::size_t k = 0; k < l.y.size(); ++k) {
            if (k) svg += ' ';
            svg += fixed2(px(static_cast<double>(k))) + ',' + fixed2(py(l.y[k]));
        }
        svg += "\"/>\n";
    }

    double ly = kPlotTop + 10;
    svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const Algorithm a : spec.algorithms) {
        if (!present.contains(a)) continue;
        svg += "<line x1=\"615.00\" y1=\"" + fixed2(ly) + "\" x2=\"640.00\" y2=\"" + fixed2(ly) +
               "\" stroke=\"" + std::string(color_of(a)) + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"646.00\" y=\"" + fixed2(ly + 4) + "\">" + std::string(to_string(a)) +
               (clamped.contains(a) ? " (clamped)" : "") + "</text>\n";
        ly += 20;
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

void emit_figure(std::span<const TraceSeries> series, const FigureSpec& spec,
                 const std::filesystem::path& path) {
    write_text_file(path, render_svg(series, spec));
}

void emit_figure(const EnsembleResult& res, const FigureSpec& spec, const std::filesystem::path& path) {
    const auto series = to_series(res);
    emit_figure(series, spec, path);
}

}  // namespace sdlab
