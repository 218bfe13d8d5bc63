#pragma once

#include "nbox/ternary.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nbox {

enum class HeatmapFormat { Svg, Ppm };

using Rgb = std::array<std::uint8_t, 3>;

/// 0 is red, * grey, 1 black.
Rgb heatmap_color(Symbol s) noexcept;

/// Throws ParseError for anything but "svg" or "ppm".
HeatmapFormat heatmap_format_from_string(std::string_view name);

/// Renders the n x d symbol grid of `code`: row i is string i in list order,
/// column j is coordinate j. Each cell is `cell_size` pixels square. SVG emits
/// one rect per cell, PPM is binary P6. Throws DomainError for an empty code
/// or cell_size == 0.
std::string render_heatmap(const CodeList& code, HeatmapFormat format, std::size_t cell_size = 16);

}  // namespace nbox
