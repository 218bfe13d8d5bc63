#include "nbox/construction.hpp"
#include "nbox/covering.hpp"
#include "nbox/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace nbox;

namespace {

std::map<std::string, int> multiset(const CodeList& code)
{
    std::map<std::string, int> m;
    for (const auto& s : code)
        ++m[s.to_string()];
    return m;
}

// Edge multiplicity counted directly from clique sides.
std::size_t edge_count(const BipartiteCovering& cov, std::size_t u, std::size_t v)
{
    std::size_t c = 0;
    for (const auto& q : cov.cliques()) {
        auto in = [](const std::vector<std::size_t>& s, std::size_t x) {
            return std::find(s.begin(), s.end(), x) != s.end();
        };
        if ((in(q.x, u) && in(q.y, v)) || (in(q.x, v) && in(q.y, u)))
            ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("zaks code gives a Graham-Pollak partition")
{
    const auto cov = code_to_covering(zaks_code(3));
    CHECK(cov.n_vertices() == 4);
    REQUIRE(cov.cliques().size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& q : cov.cliques())
        sizes.push_back(q.x.size() * q.y.size());
    CHECK(sizes == std::vector<std::size_t>{3, 2, 1});

    for (std::size_t d = 1; d <= 8; ++d) {
        const auto c = code_to_covering(zaks_code(d));
        CHECK(c.cliques().size() == d);
        CHECK(verify_covering(c, 1));
    }
}

TEST_CASE("constructed codes give 2-coverings")
{
    for (std::size_t d = 2; d <= 20; ++d) {
        CAPTURE(d);
        const auto code = generate_code(d);
        const auto cov = code_to_covering(code);
        CHECK(cov.n_vertices() == code.size());
        CHECK(cov.cliques().size() <= d);
        CHECK(verify_covering(cov, 2));
    }
}

TEST_CASE("edge multiplicity equals distance")
{
    std::mt19937 rng(21);
    for (int round = 0; round < 30; ++round) {
        const std::size_t d = 2 + rng() % 6;
        // A random 1..d neighborly code: random strings filtered greedily.
        CodeList code(d);
        for (int tries = 0; tries < 60; ++tries) {
            TernaryString s(d);
            for (std::size_t j = 0; j < d; ++j)
                s.set(j, static_cast<Symbol>(rng() % 3));
            bool ok = true;
            for (const auto& t : code)
                ok = ok && dist(s, t) >= 1;
            if (ok)
                code.push_back(s);
        }
        const auto cov = code_to_covering(code);
        const auto mult = edge_multiplicities(cov);
        const std::size_t n = code.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t expect = i == j ? 0 : dist(code[i], code[j]);
                CHECK(mult[i * n + j] == expect);
                if (i < j)
                    CHECK(edge_count(cov, i + 1, j + 1) == expect);
            }
        // Distances survive the round trip.
        if (cov.cliques().empty())
            continue;
        const auto back = covering_to_code(cov);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(dist(back[i], back[j]) == dist(code[i], code[j]));
    }
}

TEST_CASE("verify_covering witnesses")
{
    const BipartiteCovering k3(3, {{{1}, {2}}});
    const auto v = verify_covering(k3, 1);
    REQUIRE(!v);
    CHECK(*v.violation == EdgeViolation{1, 3, 0});

    const BipartiteCovering twice(2, {{{1}, {2}}, {{2}, {1}}});
    CHECK(verify_covering(twice, 2));
    const auto over = verify_covering(twice, 1);
    REQUIRE(!over);
    CHECK(*over.violation == EdgeViolation{1, 2, 2});
}

TEST_CASE("round trips")
{
    for (const CodeList& code : {zaks_code(4), generate_code(5)}) {
        const auto back = covering_to_code(code_to_covering(code));
        CHECK(back.size() == code.size());
        for (std::size_t i = 0; i < code.size(); ++i)
            for (std::size_t j = 0; j < code.size(); ++j)
                CHECK(dist(back[i], back[j]) == dist(code[i], code[j]));
    }
    CHECK(multiset(covering_to_code(code_to_covering(zaks_code(4)))) == multiset(zaks_code(4)));

    // Stars {i} x {i+1..5} on K5.
    std::vector<BipartiteClique> stars;
    for (std::size_t i = 1; i <= 4; ++i) {
        BipartiteClique q{{i}, {}};
        for (std::size_t j = i + 1; j <= 5; ++j)
            q.y.push_back(j);
        stars.push_back(q);
    }
    const BipartiteCovering gp(5, stars);
    CHECK(verify_covering(gp, 1));
    const auto code = covering_to_code(gp);
    CHECK(code.size() == 5);
    CHECK(code.width() == 4);
    CHECK(is_k_neighborly(code, 1));
}

TEST_CASE("covering edge cases")
{
    const auto single = code_to_covering(CodeList::parse({"0*1"}));
    CHECK(single.n_vertices() == 1);
    CHECK(single.cliques().empty());
    CHECK(verify_covering(single, 1));

    CHECK_THROWS_AS(code_to_covering(CodeList(2)), DomainError);
    CHECK_THROWS_AS(code_to_covering(CodeList::parse({"0*", "*0"})), DomainError);
    CHECK_THROWS_AS(covering_to_code(BipartiteCovering(2, {})), DomainError);
    CHECK_THROWS_AS(covering_to_code(BipartiteCovering(1, {})), DomainError);

    CHECK_THROWS_AS(BipartiteCovering(0, {}), DomainError);
    CHECK_THROWS_AS(BipartiteCovering(3, {{{1}, {}}}), DomainError);
    CHECK_THROWS_AS(BipartiteCovering(3, {{{1}, {4}}}), DomainError);
    CHECK_THROWS_AS(BipartiteCovering(3, {{{1, 2}, {2}}}), DomainError);
}
