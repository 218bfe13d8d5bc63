#pragma once

#include "nbox/ternary.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbox {

struct SearchConfig {
    std::size_t k = 2;
    std::size_t d = 3;
    std::chrono::milliseconds time_budget{std::chrono::minutes(5)};
    /// Restrict the search to cliques whose densest member is 0^j *^{d-j}.
    bool symmetry_reduction = true;
    /// Known k-neighborly code of width d used as the starting incumbent.
    std::optional<CodeList> lower_bound_seed;
    /// Worker threads sharing one incumbent. 1 gives reproducible traces.
    unsigned workers = 1;
};

struct SearchResult {
    std::size_t best_size = 0;
    CodeList best_code;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Largest supported width (3^8 = 6561 vertices).
inline constexpr std::size_t max_search_width = 8;

/// Every string of width d in the search's vertex order: descending
/// non-joker count, then text order.
std::vector<TernaryString> search_vertex_order(std::size_t d);

/// Maximum k-neighborly code of width d by branch and bound over the
/// compatibility graph on all 3^d strings, with a greedy-colouring bound.
/// Running out of budget is not an error: the result is a lower bound with
/// proven_optimal = false. Throws DomainError for d == 0, d > 8, k == 0,
/// k > d, a non-positive budget, or an invalid seed.
SearchResult max_code(const SearchConfig& cfg);

struct IdentityCheck {
    std::string family;  // e.g. "n(1,d)=d+1"
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t expected = 0;
    std::size_t found = 0;
    bool proven = false;

    bool agrees() const noexcept { return proven && found == expected; }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_agree() const noexcept;
};

/// Runs max_code on n(1,d) = d+1, n(d,d) = 2^d, n(d-1,d) = 3*2^(d-2) and
/// n(2,d) = b(d) for every d <= d_max. Throws DomainError for d_max > 5.
IdentityReport verify_extremal_identities(std::size_t d_max,
                                          std::chrono::milliseconds budget_per_search = std::chrono::minutes(5));

}  // namespace nbox
