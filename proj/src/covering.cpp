#include "nbox/covering.hpp"

#include "nbox/error.hpp"
#include "nbox/kernels.hpp"

#include <algorithm>
#include <string>

namespace nbox {

BipartiteCovering::BipartiteCovering(std::size_t n_vertices, std::vector<BipartiteClique> cliques)
    : n_(n_vertices), cliques_(std::move(cliques))
{
    if (n_ == 0)
        throw DomainError("covering needs at least one vertex");
    std::vector<int> side(n_ + 1);
    for (std::size_t j = 0; j < cliques_.size(); ++j) {
        const auto& c = cliques_[j];
        if (c.x.empty() || c.y.empty())
            throw DomainError("clique " + std::to_string(j + 1) + " has an empty side");
        std::fill(side.begin(), side.end(), 0);
        auto mark = [&](std::size_t v, int s) {
            if (v == 0 || v > n_)
                throw DomainError("clique " + std::to_string(j + 1) + " uses vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n_));
            if (side[v] != 0)
                throw DomainError("clique " + std::to_string(j + 1) + " lists vertex " + std::to_string(v) + " twice");
            side[v] = s;
        };
        for (auto v : c.x)
            mark(v, 1);
        for (auto v : c.y)
            mark(v, 2);
    }
}

BipartiteCovering code_to_covering(const CodeList& code)
{
    if (code.empty())
        throw DomainError("code_to_covering: empty code");

    const kernels::PackedPlanes planes(code.strings(), code.width());
    std::vector<std::uint32_t> row;
    for (std::size_t i = 0; i + 1 < code.size(); ++i) {
        planes.distances_from(i, i + 1, row);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] == 0)
                throw DomainError("code_to_covering: entries " + std::to_string(i + 1) + " and " +
                                  std::to_string(i + 2 + j) + " are at distance 0; their edge cannot be covered");
    }

    std::vector<BipartiteClique> cliques;
    for (std::size_t j = 0; j < code.width(); ++j) {
        BipartiteClique c;
        for (std::size_t i = 0; i < code.size(); ++i) {
            const Symbol s = code[i][j];
            if (s == Symbol::Zero)
                c.x.push_back(i + 1);
            else if (s == Symbol::One)
                c.y.push_back(i + 1);
        }
        if (!c.x.empty() && !c.y.empty())
            cliques.push_back(std::move(c));
    }
    return BipartiteCovering(code.size(), std::move(cliques));
}

CodeList covering_to_code(const BipartiteCovering& cov)
{
    const std::size_t width = cov.cliques().size();
    if (width == 0)
        throw DomainError("covering_to_code: a covering without cliques gives width-0 strings");
    std::vector<TernaryString> strings(cov.n_vertices(), TernaryString(width));
    for (std::size_t j = 0; j < width; ++j) {
        for (auto v : cov.cliques()[j].x)
            strings[v - 1].set(j, Symbol::Zero);
        for (auto v : cov.cliques()[j].y)
            strings[v - 1].set(j, Symbol::One);
    }
    return CodeList(width, std::move(strings));
}

std::vector<std::size_t> edge_multiplicities(const BipartiteCovering& cov)
{
    const std::size_t n = cov.n_vertices();
    std::vector<std::size_t> count(n * n, 0);
    for (const auto& c : cov.cliques())
        for (auto x : c.x)
            for (auto y : c.y) {
                ++count[(x - 1) * n + (y - 1)];
                ++count[(y - 1) * n + (x - 1)];
            }
    return count;
}

CoveringVerdict verify_covering(const BipartiteCovering& cov, std::size_t k)
{
    const std::size_t n = cov.n_vertices();
    const auto count = edge_multiplicities(cov);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::size_t m = count[u * n + v];
            if (m == 0 || m > k)
                return {EdgeViolation{u + 1, v + 1, m}};
        }
    return {};
}

}  // namespace nbox
