#include "nbox/triple.hpp"

#include "nbox/error.hpp"
#include "nbox/kernels.hpp"
#include "nbox/list_algebra.hpp"

#include <algorithm>
#include <unordered_map>

namespace nbox {

std::string to_string(const TripleParams& p)
{
    return "(alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
           ", delta=" + std::to_string(p.delta) + ", g=" + std::to_string(p.g) + ", n=" + std::to_string(p.n) + ")";
}

TripleParams measure_params(const CodeList& a, const CodeList& b, const CodeList& c)
{
    return {a.width(), b.width(), a.width() + b.width(), c.size(), a.size()};
}

Triple::Triple(CodeList a, CodeList b, CodeList c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), params_(measure_params(a_, b_, c_))
{
    if (a_.size() != b_.size())
        throw SizeMismatch("triple: |A| = " + std::to_string(a_.size()) + " but |B| = " +
                           std::to_string(b_.size()));
    if (!c_.empty() && c_.width() != b_.width())
        throw LengthMismatch("triple: width(C) = " + std::to_string(c_.width()) + " but width(B) = " +
                             std::to_string(b_.width()));
}

CodeList Triple::code() const
{
    return pairing(a_, b_);
}

// ---------------------------------------------------------------------------
// Seeds

namespace {

CodeList list_h() { return CodeList::parse({"00", "01", "1*"}); }
CodeList list_g() { return CodeList::parse({"0", "1"}); }
CodeList list_l() { return CodeList::parse({"000", "001", "01*", "1**"}); }

Triple make_flat()
{
    const CodeList h = list_h();
    CodeList a = sum(sum(scalar(3, word("00")), scalar(3, word("01"))), scalar(3, word("1*")));
    return Triple(std::move(a), scalar(3, h), h);
}

Triple make_dagger()
{
    const CodeList l = list_l();
    CodeList a = sum(sum(scalar(4, word("00")), scalar(4, word("01"))), scalar(4, word("1*")));
    return Triple(std::move(a), scalar(3, l), l);
}

Triple make_double_dagger()
{
    const CodeList h = list_h();
    const CodeList g = list_g();
    CodeList a = sum(sum(sum(sum(scalar(2, word("00")), scalar(2, word("01"))), scalar(3, word("00"))),
                         scalar(3, word("01"))),
                     scalar(6, word("1*")));
    const CodeList top = block({{word("0"), g, word("**")}});
    const CodeList mid = block({{word("1"), word("*"), h}});
    CodeList b = sum(sum(scalar(2, top), scalar(2, mid)), block({{word("*"), g, h}}));
    CodeList c = sum(top, mid);
    return Triple(std::move(a), std::move(b), std::move(c));
}

Triple make_sharp()
{
    const CodeList h = list_h();
    CodeList a = sum(scalar(2, sum(scalar(3, word("00")), scalar(3, word("01")))), scalar(9, word("1*")));
    const CodeList top = block({{word("0"), h, word("**")}});
    const CodeList mid = block({{word("1"), word("**"), h}});
    CodeList b = sum(sum(scalar(2, top), scalar(2, mid)), block({{word("*"), h, h}}));
    CodeList c = sum(top, mid);
    return Triple(std::move(a), std::move(b), std::move(c));
}

}  // namespace

std::string_view seed_name(SeedId id) noexcept
{
    switch (id) {
    case SeedId::Flat: return "flat";
    case SeedId::Dagger: return "dagger";
    case SeedId::DoubleDagger: return "double-dagger";
    case SeedId::Sharp: return "sharp";
    }
    return "?";
}

const Triple& seed(SeedId id)
{
    static const std::array<Triple, 4> seeds{make_flat(), make_dagger(), make_double_dagger(), make_sharp()};
    return seeds[static_cast<std::size_t>(id)];
}

CodeList f4_code()
{
    return concat(list_h(), list_h());
}

CodeList f5_code()
{
    return concat(list_h(), list_l());
}

CodeList f6_code()
{
    const CodeList g = list_g();
    const CodeList h = list_h();
    return block({
        {word("0"), g, word("0"), g, word("**")},
        {word("0"), g, word("1"), word("*"), h},
        {word("1"), word("*"), word("*"), g, h},
    });
}

CodeList f7_code()
{
    const CodeList g = list_g();
    const CodeList h = list_h();
    return block({
        {word("0"), g, word("0"), h, word("**")},
        {word("0"), g, word("1"), word("**"), h},
        {word("1"), word("*"), word("*"), h, h},
    });
}

// ---------------------------------------------------------------------------
// Relations

NiceVerdict is_nice(const Triple& t)
{
    NiceVerdict v;
    auto fail = [&v](int condition, std::size_t i, std::size_t j, std::string detail) {
        v.passed = false;
        v.condition = condition;
        v.first = i;
        v.second = j;
        v.detail = std::move(detail);
        return v;
    };

    if (measure_params(t.a(), t.b(), t.c()) != t.params())
        return fail(0, 0, 0, "cached parameters do not match the lists");

    if (auto r = max_pairwise_distance_at_most(t.a(), 1); !r)
        return fail(1, r.violation->first, r.violation->second,
                    "A entries at distance " + std::to_string(r.violation->distance));

    if (t.n() > 0)
        if (auto r = is_k_neighborly(t.code(), 2); !r)
            return fail(2, r.violation->first, r.violation->second,
                        "A(+)B entries at distance " + std::to_string(r.violation->distance));

    const CodeList& b = t.b();
    const CodeList& c = t.c();
    if (c.empty())
        return v;
    if (auto r = is_k_neighborly(c, 1); !r)
        return fail(3, r.violation->first, r.violation->second,
                    "C entries at distance " + std::to_string(r.violation->distance));

    std::unordered_map<TernaryString, std::size_t, TernaryStringHash> available;
    for (const auto& s : b)
        ++available[s];
    for (std::size_t j = 0; j < c.size(); ++j) {
        auto it = available.find(c[j]);
        if (it == available.end() || it->second == 0)
            return fail(3, j, j, "C entry " + c[j].to_string() + " is not covered by B");
        --it->second;
    }

    // B followed by C in one plane set; compare each C entry with all of B.
    std::vector<TernaryString> joined(b.begin(), b.end());
    joined.insert(joined.end(), c.begin(), c.end());
    const kernels::PackedPlanes planes(joined, b.width());
    std::vector<std::uint32_t> row;
    for (std::size_t j = 0; j < c.size(); ++j) {
        planes.distances_from(b.size() + j, 0, row);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (row[i] > 1)
                return fail(3, i, j,
                            "B entry " + std::to_string(i) + " and C entry " + std::to_string(j) +
                                " at distance " + std::to_string(row[i]));
    }
    return v;
}

bool is_concordant(const Triple& t, const Triple& u)
{
    if (t.alpha() != u.alpha())
        return false;
    return max_pairwise_distance_at_most(sum(t.a(), u.a()), 1).ok();
}

bool is_congruent(const Triple& t, const Triple& u)
{
    return t.beta() == u.beta() && t.n() == u.n() && t.g() == u.g() && is_concordant(t, u);
}

// ---------------------------------------------------------------------------
// Compound

Triple compound(const Triple& t, const Triple& u, bool check_nice)
{
    if (!is_concordant(t, u))
        throw NotConcordant("compound: triples with alpha " + std::to_string(t.alpha()) + " and " +
                            std::to_string(u.alpha()) + " are not concordant");

    const std::size_t gg = t.g() * u.g();
    std::vector<BlockRow> a_rows{{word("0"), t.a()}, {word("0"), u.a()}};
    if (gg > 0)
        a_rows.push_back({word("1"), scalar(gg, jokers(t.alpha()))});

    const CodeList pad_u = jokers(u.beta());
    const CodeList pad_t = jokers(t.beta());
    CodeList a = block(a_rows);
    CodeList b = block({
        {word("0"), t.b(), pad_u},
        {word("1"), pad_t, u.b()},
        {word("*"), t.c(), u.c()},
    });
    CodeList c = block({
        {word("0"), t.c(), pad_u},
        {word("1"), pad_t, u.c()},
    });

    Triple out(std::move(a), std::move(b), std::move(c));
    if (check_nice)
        if (auto v = is_nice(out); !v)
            throw InternalError("compound produced a triple violating condition " + std::to_string(v.condition) +
                                ": " + v.detail);
    return out;
}

TripleParams compound_params(const TripleParams& t, const TripleParams& u)
{
    TripleParams out;
    out.alpha = t.alpha + 1;
    out.beta = t.beta + u.beta + 1;
    out.delta = t.delta + u.delta - t.alpha + 2;
    out.g = t.g + u.g;
    out.n = t.n + u.n + t.g * u.g;
    return out;
}

Triple power(const Triple& t, std::size_t k)
{
    Triple out = t;
    for (std::size_t i = 0; i < k; ++i)
        out = compound(out, out);
    return out;
}

TripleParams power_params(const TripleParams& t, std::size_t k)
{
    const std::size_t two_k = std::size_t{1} << k;
    const std::size_t four_k = two_k * two_k;
    TripleParams out;
    out.alpha = t.alpha + k;
    out.beta = two_k * t.beta + two_k - 1;
    out.delta = two_k * t.beta + t.alpha + two_k + k - 1;
    out.g = two_k * t.g;
    out.n = two_k * t.n + (four_k - two_k) / 2 * t.g * t.g;
    return out;
}

// ---------------------------------------------------------------------------
// Statistics

std::pair<std::size_t, std::size_t> defined_count_range(const CodeList& list)
{
    if (list.empty())
        return {0, 0};
    std::size_t lo = list[0].defined_count();
    std::size_t hi = lo;
    for (const auto& s : list) {
        const std::size_t c = s.defined_count();
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return {lo, hi};
}

TripleStats triple_stats(const Triple& t)
{
    const auto [mu, big_m] = defined_count_range(t.code());
    const auto [kappa, big_k] = defined_count_range(t.c());
    return {mu, big_m, kappa, big_k};
}

}  // namespace nbox
