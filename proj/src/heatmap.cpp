#include "nbox/heatmap.hpp"

#include "nbox/error.hpp"

#include <sstream>

namespace nbox {

Rgb heatmap_color(Symbol s) noexcept
{
    switch (s) {
    case Symbol::Zero: return {255, 0, 0};
    case Symbol::Joker: return {128, 128, 128};
    case Symbol::One: return {0, 0, 0};
    }
    return {0, 0, 0};
}

HeatmapFormat heatmap_format_from_string(std::string_view name)
{
    if (name == "svg")
        return HeatmapFormat::Svg;
    if (name == "ppm")
        return HeatmapFormat::Ppm;
    throw ParseError("unknown heat-map format '" + std::string(name) + "'");
}

namespace {

std::string render_svg(const CodeList& code, std::size_t cell)
{
    const std::size_t w = code.width() * cell;
    const std::size_t h = code.size() * cell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = 0; j < code.width(); ++j) {
            const Rgb c = heatmap_color(code[i][j]);
            out << "<rect x=\"" << j * cell << "\" y=\"" << i * cell << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"rgb(" << int{c[0]} << ',' << int{c[1]} << ',' << int{c[2]} << ")\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

std::string render_ppm(const CodeList& code, std::size_t cell)
{
    const std::size_t w = code.width() * cell;
    const std::size_t h = code.size() * cell;
    std::string out = "P6\n" + std::to_string(w) + ' ' + std::to_string(h) + "\n255\n";
    const std::size_t header = out.size();
    out.resize(header + w * h * 3);
    char* px = out.data() + header;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t y = 0; y < cell; ++y)
            for (std::size_t j = 0; j < code.width(); ++j) {
                const Rgb c = heatmap_color(code[i][j]);
                for (std::size_t x = 0; x < cell; ++x) {
                    *px++ = static_cast<char>(c[0]);
                    *px++ = static_cast<char>(c[1]);
                    *px++ = static_cast<char>(c[2]);
                }
            }
    return out;
}

}  // namespace

std::string render_heatmap(const CodeList& code, HeatmapFormat format, std::size_t cell_size)
{
    if (code.empty())
        throw DomainError("heat map of an empty code");
    if (code.width() == 0)
        throw DomainError("heat map of width-0 strings");
    if (cell_size == 0)
        throw DomainError("heat-map cell size must be positive");
    return format == HeatmapFormat::Svg ? render_svg(code, cell_size) : render_ppm(code, cell_size);
}

}  // namespace nbox
