#include "nbox/construction.hpp"

#include "nbox/error.hpp"

#include <string>

namespace nbox {

std::string_view plan_case_name(PlanCase c) noexcept
{
    switch (c) {
    case PlanCase::A: return "a";
    case PlanCase::APrime: return "a'";
    case PlanCase::ADoublePrime: return "a''";
    case PlanCase::SingleSeed: return "single-seed-k0";
    }
    return "?";
}

std::size_t level_min_width(std::size_t k)
{
    return 3 * (std::size_t{1} << k) + k + 1;
}

std::size_t level_max_width(std::size_t k)
{
    return 6 * (std::size_t{1} << k) + k + 1;
}

std::size_t level_of(std::size_t d)
{
    if (d < 4)
        throw DomainError("no decomposition for width " + std::to_string(d) + " (need d >= 4)");
    std::size_t k = 0;
    while (level_max_width(k) < d)
        ++k;
    return k;
}

SeedCounts count_seeds(const std::vector<SeedId>& leaves)
{
    SeedCounts c;
    for (SeedId id : leaves) {
        switch (id) {
        case SeedId::Flat: ++c.flat; break;
        case SeedId::Dagger: ++c.dagger; break;
        case SeedId::DoubleDagger: ++c.double_dagger; break;
        case SeedId::Sharp: ++c.sharp; break;
        }
    }
    return c;
}

std::size_t predicted_delta(const SeedCounts& counts, std::size_t k)
{
    const std::size_t two_k = std::size_t{1} << k;
    if (counts.total() != two_k)
        throw DomainError("seed counts sum to " + std::to_string(counts.total()) + ", expected " +
                          std::to_string(two_k));
    return 2 * counts.flat + 3 * counts.dagger + 4 * counts.double_dagger + 5 * counts.sharp + two_k + k + 1;
}

std::vector<SeedId> leaves_from_counts(const SeedCounts& counts)
{
    std::vector<SeedId> leaves;
    leaves.reserve(counts.total());
    leaves.insert(leaves.end(), counts.flat, SeedId::Flat);
    leaves.insert(leaves.end(), counts.dagger, SeedId::Dagger);
    leaves.insert(leaves.end(), counts.double_dagger, SeedId::DoubleDagger);
    leaves.insert(leaves.end(), counts.sharp, SeedId::Sharp);
    return leaves;
}

DecompositionPlan plan_decomposition(std::size_t d)
{
    const std::size_t k = level_of(d);
    const std::size_t two_k = std::size_t{1} << k;
    const std::size_t rho = level_min_width(k);
    const std::size_t rho1 = rho + two_k;
    const std::size_t rho2 = rho1 + two_k;
    const std::size_t rho3 = rho2 + two_k;

    SeedCounts counts;
    PlanCase tag;
    if (d < rho1) {
        counts.flat = rho1 - d;
        counts.dagger = d - rho;
        tag = PlanCase::A;
    } else if (d < rho2) {
        counts.dagger = rho2 - d;
        counts.double_dagger = d - rho1;
        tag = PlanCase::APrime;
    } else {
        counts.double_dagger = rho3 - d;
        counts.sharp = d - rho2;
        tag = PlanCase::ADoublePrime;
    }
    if (k == 0)
        tag = PlanCase::SingleSeed;

    DecompositionPlan plan{k, leaves_from_counts(counts), tag};
    if (predicted_delta(counts, k) != d)
        throw InternalError("plan for width " + std::to_string(d) + " predicts another width");
    return plan;
}

std::vector<SeedCounts> all_decompositions(std::size_t d, std::size_t k)
{
    const std::size_t two_k = std::size_t{1} << k;
    std::vector<SeedCounts> out;
    for (std::size_t p = 0; p <= two_k; ++p)
        for (std::size_t q = 0; p + q <= two_k; ++q)
            for (std::size_t r = 0; p + q + r <= two_k; ++r) {
                const SeedCounts c{p, q, r, two_k - p - q - r};
                if (predicted_delta(c, k) == d)
                    out.push_back(c);
            }
    return out;
}

Triple fold_leaves(const std::vector<SeedId>& leaves)
{
    const std::size_t n = leaves.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw DomainError("leaf count " + std::to_string(n) + " is not a power of two");

    std::vector<Triple> level;
    level.reserve(n);
    for (SeedId id : leaves)
        level.push_back(seed(id));
    while (level.size() > 1) {
        std::vector<Triple> next;
        next.reserve(level.size() / 2);
        for (std::size_t i = 0; i < level.size(); i += 2)
            next.push_back(compound(level[i], level[i + 1]));
        level = std::move(next);
    }
    return std::move(level.front());
}

Triple build_triple(const DecompositionPlan& plan)
{
    if (plan.leaves.size() != (std::size_t{1} << plan.k))
        throw DomainError("plan at depth " + std::to_string(plan.k) + " has " + std::to_string(plan.leaves.size()) +
                          " leaves");
    return fold_leaves(plan.leaves);
}

CodeList generate_code(std::size_t d)
{
    if (d < 2)
        throw DomainError("generate_code: width must be at least 2");
    if (d == 2)
        return CodeList::parse({"00", "01", "10", "11"});
    if (d == 3)
        return CodeList::parse({"000", "001", "010", "011", "10*", "11*"});
    return build_triple(plan_decomposition(d)).code();
}

CodeList zaks_code(std::size_t d)
{
    if (d == 0)
        throw DomainError("zaks_code: width must be positive");
    CodeList out(d);
    for (std::size_t i = 0; i < d; ++i) {
        TernaryString s(d);
        for (std::size_t j = 0; j < i; ++j)
            s.set(j, Symbol::Zero);
        s.set(i, Symbol::One);
        out.push_back(std::move(s));
    }
    out.push_back(TernaryString(d, Symbol::Zero));
    return out;
}

}  // namespace nbox
