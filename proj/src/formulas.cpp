#include "nbox/formulas.hpp"

#include "nbox/error.hpp"

#include <algorithm>
#include <string>

namespace nbox {

namespace {

// Number of terms <= v in the a-sequence (v >= 1).
std::uint64_t a_terms_up_to(std::uint64_t v)
{
    std::uint64_t count = v - 1;
    for (std::uint64_t t = 3; t <= v; t *= 2)
        ++count;
    return count;
}

}  // namespace

std::uint64_t seq_a(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("a(n) is defined for n >= 1");
    std::uint64_t lo = 2;
    std::uint64_t hi = n + 1;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (a_terms_up_to(mid) >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::uint64_t seq_b(std::uint64_t d)
{
    if (d < 2)
        throw DomainError("b(d) is defined for d >= 2");
    std::uint64_t total = 4;
    for (std::uint64_t i = 1; i + 2 <= d; ++i)
        total += seq_a(i);
    return total;
}

std::uint64_t seq_b_closed_form(std::uint64_t d)
{
    if (d < 4)
        throw DomainError("the closed form of b(d) needs d >= 4");
    std::uint64_t r = 0;
    while (3 * (std::uint64_t{2} << r) + r + 1 < d)
        ++r;
    const std::uint64_t two_r = std::uint64_t{1} << r;
    // d (d - 2r - 3) is always even: either d is even or d - 2r - 3 is.
    const std::int64_t sd = static_cast<std::int64_t>(d);
    const std::int64_t quad = sd * (sd - 2 * static_cast<std::int64_t>(r) - 3);
    if (quad % 2 != 0)
        throw InternalError("b closed form: odd quadratic term");
    const std::int64_t value = quad / 2 + 6 * static_cast<std::int64_t>(two_r) +
                               static_cast<std::int64_t>((r + 1) * (r + 2) / 2);
    return static_cast<std::uint64_t>(value);
}

std::uint64_t seq_c(std::uint64_t n)
{
    if (n < 2)
        throw DomainError("c(n) is defined for n >= 2");
    if (n == 2)
        return 1;
    auto b = [](std::uint64_t d) { return d >= 4 ? seq_b_closed_form(d) : seq_b(d); };
    std::uint64_t lo = 2;
    std::uint64_t hi = std::max<std::uint64_t>(n, 4);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (b(mid) >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::vector<std::uint64_t> sequence_range(Sequence seq, std::uint64_t from, std::uint64_t to)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = from; i <= to; ++i) {
        switch (seq) {
        case Sequence::A: out.push_back(seq_a(i)); break;
        case Sequence::B: out.push_back(seq_b(i)); break;
        case Sequence::C: out.push_back(seq_c(i)); break;
        }
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> distribution_bounds(std::int64_t mu0, std::int64_t big_m0,
                                                          std::int64_t kappa0, std::int64_t big_k0,
                                                          std::int64_t k)
{
    const std::int64_t lower = std::min(2 * kappa0 - 1, mu0) + 2 * k;
    const std::int64_t upper = std::max(2 * big_k0 - 1, big_m0) + 2 * k;
    return {lower, upper};
}

}  // namespace nbox
