#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "sdlab/config.hpp"
#include "sdlab/ensemble.hpp"

namespace sdlab {

/// Values at or below zero on a log axis are drawn at this level and the
/// affected algorithm is marked "(clamped)" in the legend.
inline constexpr double kLogClampFloor = 1e-14;

/// Self-contained SVG line chart: iteration on x, the chosen normalized
/// metric on y (log10 axis when spec.log_y), one polyline per trace, legend
/// by algorithm. Output is a pure function of the inputs.
/// Throws ConfigError when no trace matches spec.algorithms.
[[nodiscard]] std::string render_svg(std::span<const TraceSeries> series, const FigureSpec& spec);

void emit_figure(std::span<const TraceSeries> series, const FigureSpec& spec,
                 const std::filesystem::path& path);
void emit_figure(const EnsembleResult& res, const FigureSpec& spec, const std::filesystem::path& path);

}  // namespace sdlab
