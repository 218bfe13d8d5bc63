#pragma once

#include "nbox/ternary.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace nbox {

struct TripleParams {
    std::size_t alpha = 0;  // width of A
    std::size_t beta = 0;   // width of B (and C)
    std::size_t delta = 0;  // alpha + beta, the width of A (+) B
    std::size_t g = 0;      // |C|
    std::size_t n = 0;      // |A| = |B|

    bool operator==(const TripleParams&) const = default;
};

std::string to_string(const TripleParams& p);

/// Three lists (A, B, C): the unit the recursive construction works on.
///
/// The constructor enforces only the structural shape (|A| = |B|,
/// width(C) = width(B)); niceness is a separate, checkable property.
class Triple {
public:
    Triple(CodeList a, CodeList b, CodeList c);

    const CodeList& a() const noexcept { return a_; }
    const CodeList& b() const noexcept { return b_; }
    const CodeList& c() const noexcept { return c_; }
    const TripleParams& params() const noexcept { return params_; }

    std::size_t alpha() const noexcept { return params_.alpha; }
    std::size_t beta() const noexcept { return params_.beta; }
    std::size_t delta() const noexcept { return params_.delta; }
    std::size_t g() const noexcept { return params_.g; }
    std::size_t n() const noexcept { return params_.n; }

    /// A (+) B, the 2-neighborly code this triple carries.
    CodeList code() const;

private:
    CodeList a_, b_, c_;
    TripleParams params_;
};

TripleParams measure_params(const CodeList& a, const CodeList& b, const CodeList& c);

enum class SeedId { Flat, Dagger, DoubleDagger, Sharp };

inline constexpr std::array<SeedId, 4> all_seeds{SeedId::Flat, SeedId::Dagger, SeedId::DoubleDagger,
                                                 SeedId::Sharp};

std::string_view seed_name(SeedId id) noexcept;

/// The four base triples, extracted from the optimal codes of width 4..7.
const Triple& seed(SeedId id);

/// Optimal codes of width 4..7, built directly from their block forms.
CodeList f4_code();
CodeList f5_code();
CodeList f6_code();
CodeList f7_code();

struct NiceVerdict {
    /// 0 = cached parameters disagree with the lists, 1..3 = violated
    /// condition; meaningless when ok().
    int condition = 0;
    std::size_t first = 0;
    std::size_t second = 0;
    std::string detail;
    bool passed = true;

    bool ok() const noexcept { return passed; }
    explicit operator bool() const noexcept { return passed; }
};

/// Conditions: (1) A has pairwise distances <= 1; (2) A (+) B is
/// 2-neighborly; (3) C is a 1-neighborly sub-multiset of B with
/// dist(u, v) <= 1 for u in B, v in C.
NiceVerdict is_nice(const Triple& t);

/// Same alpha, and pairwise distances <= 1 over A + A'.
bool is_concordant(const Triple& t, const Triple& u);

/// Concordant, plus equal beta, n and g.
bool is_congruent(const Triple& t, const Triple& u);

/// The compound T (x) T'. Throws NotConcordant unless the inputs are
/// concordant; with `check_nice`, throws InternalError if the result is not
/// nice.
Triple compound(const Triple& t, const Triple& u, bool check_nice = false);

/// Parameters of compound(t, u) predicted from the parameters alone.
TripleParams compound_params(const TripleParams& t, const TripleParams& u);

/// T_0 = T, T_{k+1} = T_k (x) T_k.
Triple power(const Triple& t, std::size_t k);

/// Closed-form parameters of power(t, k).
TripleParams power_params(const TripleParams& t, std::size_t k);

/// Non-joker counts: mu/M over A (+) B, kappa/K over C.
struct TripleStats {
    std::size_t mu = 0;
    std::size_t big_m = 0;
    std::size_t kappa = 0;
    std::size_t big_k = 0;

    bool operator==(const TripleStats&) const = default;
};

/// (min, max) of defined_count() over a list; (0, 0) for an empty list.
std::pair<std::size_t, std::size_t> defined_count_range(const CodeList& list);

TripleStats triple_stats(const Triple& t);

}  // namespace nbox
