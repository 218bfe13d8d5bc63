#pragma once

#include "nbox/ternary.hpp"
#include "nbox/triple.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace nbox {

/// Which two consecutive seeds a canonical plan mixes. SingleSeed is used
/// for k = 0, where the plan is one seed.
enum class PlanCase { A, APrime, ADoublePrime, SingleSeed };

std::string_view plan_case_name(PlanCase c) noexcept;

/// An elementary decomposition: 2^k seeds folded pairwise into one triple.
struct DecompositionPlan {
    std::size_t k = 0;
    std::vector<SeedId> leaves;
    PlanCase case_tag = PlanCase::SingleSeed;
};

/// Occurrence counts of the four seeds in a leaf list.
struct SeedCounts {
    std::size_t flat = 0;
    std::size_t dagger = 0;
    std::size_t double_dagger = 0;
    std::size_t sharp = 0;

    std::size_t total() const noexcept { return flat + dagger + double_dagger + sharp; }
    bool operator==(const SeedCounts&) const = default;
};

/// Lower and upper end of the width range reachable at fold depth k:
/// [3*2^k + k + 1, 6*2^k + k + 1].
std::size_t level_min_width(std::size_t k);
std::size_t level_max_width(std::size_t k);

/// The unique k whose range contains d. Throws DomainError for d < 4.
std::size_t level_of(std::size_t d);

/// Width of the folded triple, from seed counts alone:
/// 2p + 3q + 4r + 5s + 2^k + k + 1. Throws DomainError unless the counts sum
/// to 2^k.
std::size_t predicted_delta(const SeedCounts& counts, std::size_t k);

SeedCounts count_seeds(const std::vector<SeedId>& leaves);

/// The canonical plan for width d (two consecutive seeds, lower seed first).
/// Throws DomainError for d < 4.
DecompositionPlan plan_decomposition(std::size_t d);

/// Every (p, q, r, s) with p + q + r + s = 2^k whose fold has width d.
std::vector<SeedCounts> all_decompositions(std::size_t d, std::size_t k);

/// Leaves in seed order (all flats, then daggers, ...) for the given counts.
std::vector<SeedId> leaves_from_counts(const SeedCounts& counts);

/// Folds the leaves by pairing neighbours (2i, 2i+1) k times. Throws
/// DomainError if the leaf count is not 2^k.
Triple build_triple(const DecompositionPlan& plan);
Triple fold_leaves(const std::vector<SeedId>& leaves);

/// A 2-neighborly code of width d and size b(d). Throws DomainError for d < 2.
CodeList generate_code(std::size_t d);

/// The d + 1 strings 0^{i-1} 1 *^{d-i} (i = 1..d) followed by 0^d; every pair
/// is at distance exactly 1. Throws DomainError for d == 0.
CodeList zaks_code(std::size_t d);

}  // namespace nbox
