#pragma once

#include "nbox/ternary.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nbox {

/// One complete bipartite subgraph X x Y. Vertices are 1-based.
struct BipartiteClique {
    std::vector<std::size_t> x;
    std::vector<std::size_t> y;

    bool operator==(const BipartiteClique&) const = default;
};

/// A family of bipartite cliques on the vertex set {1..n} of K_n.
class BipartiteCovering {
public:
    /// Throws DomainError if n == 0 or a clique has an empty side, a vertex
    /// out of range, or a vertex on both sides.
    BipartiteCovering(std::size_t n_vertices, std::vector<BipartiteClique> cliques);

    std::size_t n_vertices() const noexcept { return n_; }
    const std::vector<BipartiteClique>& cliques() const noexcept { return cliques_; }

    bool operator==(const BipartiteCovering&) const = default;

private:
    std::size_t n_;
    std::vector<BipartiteClique> cliques_;
};

/// Vertex i is code entry i; clique j holds the entries with 0 (X) and 1 (Y)
/// at coordinate j. Coordinates with an empty side are dropped. Throws
/// DomainError on an empty code or a pair at distance 0.
BipartiteCovering code_to_covering(const CodeList& code);

/// Inverse direction: one coordinate per clique. Throws DomainError when
/// there are no cliques (the code would have width 0).
CodeList covering_to_code(const BipartiteCovering& cov);

/// An edge {u, v} (1-based, u < v) covered `count` times.
struct EdgeViolation {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t count = 0;

    bool operator==(const EdgeViolation&) const = default;
};

struct CoveringVerdict {
    std::optional<EdgeViolation> violation;

    bool ok() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// How many cliques contain each edge; row-major n x n, symmetric, zero
/// diagonal, indexed from 0.
std::vector<std::size_t> edge_multiplicities(const BipartiteCovering& cov);

/// Passes iff every edge of K_n lies in between 1 and k cliques. Reports the
/// first offending edge in (u, v) order.
CoveringVerdict verify_covering(const BipartiteCovering& cov, std::size_t k);

}  // namespace nbox
