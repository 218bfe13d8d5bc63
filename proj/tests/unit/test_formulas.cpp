#include "nbox/error.hpp"
#include "nbox/formulas.hpp"

#include <doctest.h>

using namespace nbox;

namespace {

// a(n) by listing: integers from 2 upward, 3*2^r written twice.
std::vector<std::uint64_t> listed_a(std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 2; out.size() < count; ++v) {
        out.push_back(v);
        const bool doubled = v % 3 == 0 && ((v / 3) & (v / 3 - 1)) == 0;
        if (doubled && out.size() < count)
            out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("a(n)")
{
    const std::vector<std::uint64_t> head{2, 3, 3, 4, 5, 6, 6};
    for (std::size_t i = 0; i < head.size(); ++i)
        CHECK(seq_a(i + 1) == head[i]);
    CHECK(seq_a(12) == 11);
    CHECK(seq_a(13) == 12);
    CHECK(seq_a(14) == 12);

    const auto listed = listed_a(5000);
    for (std::size_t n = 1; n <= listed.size(); ++n)
        CHECK(seq_a(n) == listed[n - 1]);
    for (std::uint64_t n = 1; n < 200; ++n) {
        const auto diff = seq_a(n + 1) - seq_a(n);
        CHECK((diff == 0 || diff == 1));
    }
    CHECK_THROWS_AS(seq_a(0), DomainError);
}

TEST_CASE("b(d) reproduces the table")
{
    const std::vector<std::uint64_t> table{4, 6, 9, 12, 16, 21, 27, 33, 40, 48, 57, 67, 78, 90, 102, 115, 129, 144, 160};
    CHECK(sequence_range(Sequence::B, 2, 20) == table);
    CHECK_THROWS_AS(seq_b(1), DomainError);
    CHECK_THROWS_AS(seq_b(0), DomainError);
}

TEST_CASE("b(d) closed form equals the partial sums")
{
    const auto a = listed_a(1000);
    std::uint64_t partial = 4;
    for (std::uint64_t d = 3; d <= 1000; ++d) {
        partial += a[d - 3];
        CHECK(seq_b(d) == partial);
        if (d >= 4)
            CHECK(seq_b_closed_form(d) == partial);
        CHECK(seq_b(d) <= d * d + 1);
        CHECK(seq_b(d) > seq_b(d - 1));
        CHECK(seq_b(d) - seq_b(d - 1) == seq_a(d - 2));
    }
    CHECK(seq_b_closed_form(7) == 21);
    CHECK_THROWS_AS(seq_b_closed_form(3), DomainError);
}

TEST_CASE("c(n)")
{
    const std::vector<std::uint64_t> table{1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 7, 8, 8};
    CHECK(sequence_range(Sequence::C, 2, 23) == table);
    CHECK(seq_c(21) == 7);
    for (std::uint64_t d = 2; d <= 100; ++d)
        CHECK(seq_c(seq_b(d)) == d);
    for (std::uint64_t n = 2; n < 2000; ++n)
        CHECK(seq_c(n) <= seq_c(n + 1));
    CHECK_THROWS_AS(seq_c(1), DomainError);
}

TEST_CASE("sequence ranges")
{
    CHECK(sequence_range(Sequence::A, 1, 7) == std::vector<std::uint64_t>{2, 3, 3, 4, 5, 6, 6});
    CHECK(sequence_range(Sequence::B, 5, 4).empty());
}

TEST_CASE("distribution bounds")
{
    CHECK(distribution_bounds(2, 5, 1, 3, 0) == std::pair<std::int64_t, std::int64_t>{1, 5});
    CHECK(distribution_bounds(2, 5, 1, 3, 3) == std::pair<std::int64_t, std::int64_t>{7, 11});
    CHECK(distribution_bounds(0, 0, 0, 0, 0) == std::pair<std::int64_t, std::int64_t>{-1, 0});
    CHECK(distribution_bounds(4, 4, 3, 3, 1) == std::pair<std::int64_t, std::int64_t>{6, 7});
}
