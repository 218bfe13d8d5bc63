#include "nbox/construction.hpp"
#include "nbox/error.hpp"
#include "nbox/heatmap.hpp"

#include <doctest.h>

#include <regex>
#include <sstream>

using namespace nbox;

namespace {

struct Ppm {
    std::size_t width = 0;
    std::size_t height = 0;
    std::string pixels;
};

Ppm parse_ppm(const std::string& bytes)
{
    std::istringstream in(bytes);
    std::string magic;
    int maxval = 0;
    Ppm p;
    in >> magic >> p.width >> p.height >> maxval;
    in.get();
    REQUIRE(magic == "P6");
    REQUIRE(maxval == 255);
    p.pixels.assign(std::istreambuf_iterator<char>(in), {});
    return p;
}

}  // namespace

TEST_CASE("palette")
{
    CHECK(heatmap_color(Symbol::Zero) == Rgb{255, 0, 0});
    CHECK(heatmap_color(Symbol::Joker) == Rgb{128, 128, 128});
    CHECK(heatmap_color(Symbol::One) == Rgb{0, 0, 0});
    CHECK(heatmap_format_from_string("svg") == HeatmapFormat::Svg);
    CHECK(heatmap_format_from_string("ppm") == HeatmapFormat::Ppm);
    CHECK_THROWS_AS(heatmap_format_from_string("png"), ParseError);
}

TEST_CASE("ppm grid follows list order")
{
    const auto code = generate_code(4);
    const auto p = parse_ppm(render_heatmap(code, HeatmapFormat::Ppm, 1));
    CHECK(p.width == 4);
    CHECK(p.height == 9);
    REQUIRE(p.pixels.size() == 9 * 4 * 3);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const Rgb c = heatmap_color(code[i][j]);
            for (std::size_t ch = 0; ch < 3; ++ch)
                CHECK(static_cast<unsigned char>(p.pixels[(i * 4 + j) * 3 + ch]) == c[ch]);
        }

    const auto big = parse_ppm(render_heatmap(code, HeatmapFormat::Ppm, 5));
    CHECK(big.width == 20);
    CHECK(big.height == 45);
    // pixel (x, y) carries cell (y / 5, x / 5)
    for (std::size_t y = 0; y < 45; y += 7)
        for (std::size_t x = 0; x < 20; x += 3) {
            const Rgb c = heatmap_color(code[y / 5][x / 5]);
            CHECK(static_cast<unsigned char>(big.pixels[(y * 20 + x) * 3]) == c[0]);
        }
}

TEST_CASE("svg has one rect per cell")
{
    const auto code = generate_code(4);
    const std::string svg = render_heatmap(code, HeatmapFormat::Svg, 10);
    const std::regex rect(R"re(<rect x="(\d+)" y="(\d+)" width="10" height="10" fill="rgb\((\d+),(\d+),(\d+)\)"/>)re");
    std::size_t count = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it) {
        const std::size_t j = std::stoul((*it)[1]) / 10;
        const std::size_t i = std::stoul((*it)[2]) / 10;
        const Rgb c = heatmap_color(code[i][j]);
        CHECK(std::stoi((*it)[3]) == c[0]);
        CHECK(std::stoi((*it)[4]) == c[1]);
        CHECK(std::stoi((*it)[5]) == c[2]);
        ++count;
    }
    CHECK(count == 36);
    CHECK(svg.find("width=\"40\" height=\"90\"") != std::string::npos);
}

TEST_CASE("all-joker string is all grey")
{
    const auto p = parse_ppm(render_heatmap(CodeList::parse({"*****"}), HeatmapFormat::Ppm, 1));
    CHECK(p.width == 5);
    CHECK(p.height == 1);
    for (char c : p.pixels)
        CHECK(static_cast<unsigned char>(c) == 128);
}

TEST_CASE("output is deterministic and errors are reported")
{
    const auto code = generate_code(11);
    CHECK(render_heatmap(code, HeatmapFormat::Svg) == render_heatmap(code, HeatmapFormat::Svg));
    CHECK(render_heatmap(code, HeatmapFormat::Ppm, 3) == render_heatmap(generate_code(11), HeatmapFormat::Ppm, 3));
    CHECK_THROWS_AS(render_heatmap(CodeList(3), HeatmapFormat::Svg), DomainError);
    CHECK_THROWS_AS(render_heatmap(code, HeatmapFormat::Ppm, 0), DomainError);
}
