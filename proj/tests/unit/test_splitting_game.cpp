#include "nbox/construction.hpp"
#include "nbox/error.hpp"
#include "nbox/exact_search.hpp"
#include "nbox/splitting_game.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace nbox;

namespace {

// The Figure 5 line for (k, d) = (2, 3): split at 1, split 0** at 2, then
// three more splits ending at six strings.
const std::vector<Move> figure5{{0, 1}, {0, 2}, {0, 2}, {0, 3}, {0, 3}};

std::vector<std::string> sorted_strings(const CodeList& code)
{
    auto v = code.to_strings();
    std::sort(v.begin(), v.end());
    return v;
}

// Exhaustive play over text strings with no transposition table.
std::size_t brute_score(std::size_t k, const std::vector<std::string>& code)
{
    std::size_t best = code.size();
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t p = 0; p < code[i].size(); ++p) {
            if (code[i][p] != '*')
                continue;
            std::string zero = code[i], one = code[i];
            zero[p] = '0';
            one[p] = '1';
            std::vector<std::string> next;
            for (std::size_t j = 0; j < code.size(); ++j)
                if (j != i)
                    next.push_back(code[j]);
            bool legal = true;
            for (const auto& other : next)
                for (const auto* child : {&zero, &one}) {
                    std::size_t dd = 0;
                    for (std::size_t t = 0; t < other.size(); ++t)
                        dd += other[t] != '*' && (*child)[t] != '*' && other[t] != (*child)[t];
                    legal = legal && dd >= 1 && dd <= k;
                }
            if (!legal)
                continue;
            next.push_back(zero);
            next.push_back(one);
            best = std::max(best, brute_score(k, next));
        }
    return best;
}

}  // namespace

TEST_CASE("split")
{
    const auto [a, b] = split(TernaryString::parse("0**1"), 3);
    CHECK(a.to_string() == "0*01");
    CHECK(b.to_string() == "0*11");
    CHECK(dist(a, b) == 1);
    const auto [z, o] = split(TernaryString::parse("*"), 1);
    CHECK(z.to_string() == "0");
    CHECK(o.to_string() == "1");
    CHECK_THROWS_AS(split(TernaryString::parse("0**1"), 1), DomainError);
    CHECK_THROWS_AS(split(TernaryString::parse("0**1"), 0), DomainError);
    CHECK_THROWS_AS(split(TernaryString::parse("0**1"), 5), DomainError);
}

TEST_CASE("initial state")
{
    const GameState s(2, 3);
    CHECK(s.code() == CodeList::parse({"***"}));
    CHECK(s.score() == 1);
    CHECK(s.legal_moves() == std::vector<Move>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(!s.terminal());
    CHECK_THROWS_AS(GameState(3, 2), DomainError);
    CHECK_THROWS_AS(GameState(0, 2), DomainError);
    CHECK_THROWS_AS(GameState(1, 0), DomainError);
}

TEST_CASE("the Figure 5 line")
{
    GameState s(2, 3);
    s = s.apply(figure5[0]);
    CHECK(s.code() == CodeList::parse({"0**", "1**"}));
    s = s.apply(figure5[1]);
    CHECK(s.code() == CodeList::parse({"1**", "00*", "01*"}));
    CHECK(is_k_neighborly(s.code(), 1));
    CHECK(!s.check(Move{0, 2}));  // 1** at 2 is legal

    for (std::size_t i = 2; i < figure5.size(); ++i) {
        CHECK(!s.terminal());
        s = s.apply(figure5[i]);
        CHECK(is_k_neighborly(s.code(), 2));
        CHECK(s.score() == i + 2);
    }
    CHECK(s.score() == 6);
    CHECK(s.terminal());
    CHECK(s.legal_moves().empty());
    CHECK(sorted_strings(s.code()) == sorted_strings(generate_code(3)));
    CHECK(GameState::replay(2, 3, figure5) == s);
}

TEST_CASE("illegal moves carry the violating pair")
{
    GameState s = GameState::replay(1, 2, {{0, 1}, {0, 2}});
    CHECK(s.code() == CodeList::parse({"1*", "00", "01"}));
    const auto r = s.check(Move{0, 2});
    REQUIRE(r);
    REQUIRE(r->pair);
    CHECK(r->pair->first == 0);
    CHECK(r->pair->second == 1);  // 11 against 00 is found before 10 against 01
    CHECK(r->distance == 2);
    try {
        (void)s.apply(Move{0, 2});
        FAIL("expected IllegalMove");
    } catch (const IllegalMove& e) {
        CHECK(e.rejection().distance == 2);
    }
    CHECK(s.code() == CodeList::parse({"1*", "00", "01"}));

    CHECK(s.check(Move{1, 1}));   // no joker
    CHECK(s.check(Move{7, 1}));   // no entry
    CHECK(s.check(Move{0, 9}));   // no coordinate
    CHECK_THROWS_AS(s.apply(Move{1, 1}), IllegalMove);
}

TEST_CASE("undo reverses apply")
{
    std::mt19937 rng(31);
    for (int round = 0; round < 50; ++round) {
        const std::size_t d = 2 + rng() % 4;
        const std::size_t k = 1 + rng() % d;
        GameState s(k, d);
        std::vector<GameState> trail{s};
        while (true) {
            const auto moves = s.legal_moves();
            if (moves.empty())
                break;
            const Move m = moves[rng() % moves.size()];
            const GameState next = s.apply(m);
            CHECK(next.undo() == s);
            CHECK(is_k_neighborly(next.code(), k));
            CHECK(next.score() == s.score() + 1);
            s = next;
            trail.push_back(s);
        }
        CHECK(GameState::replay(k, d, s.history()) == s);
        for (auto it = trail.rbegin() + 1; it != trail.rend(); ++it) {
            s = s.undo();
            CHECK(s == *it);
        }
    }
    CHECK_THROWS_AS(GameState(2, 3).undo(), DomainError);
}

TEST_CASE("legal moves match a direct check")
{
    GameState s = GameState::replay(2, 4, {{0, 1}, {0, 2}, {1, 3}});
    for (std::size_t i = 0; i < s.code().size(); ++i)
        for (std::size_t p = 1; p <= 4; ++p) {
            if (s.code()[i][p - 1] != Symbol::Joker)
                continue;
            const auto [a, b] = split(s.code()[i], p);
            bool legal = true;
            for (std::size_t j = 0; j < s.code().size(); ++j)
                if (j != i)
                    for (const auto* c : {&a, &b}) {
                        const std::size_t dd = dist(*c, s.code()[j]);
                        legal = legal && dd >= 1 && dd <= 2;
                    }
            const auto moves = s.legal_moves();
            CHECK((std::find(moves.begin(), moves.end(), Move{i, p}) != moves.end()) == legal);
        }
}

TEST_CASE("solve agrees with brute force")
{
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t k = 1; k <= d; ++k) {
            CAPTURE(k);
            CAPTURE(d);
            const std::size_t expect = brute_score(k, {std::string(d, '*')});
            for (bool sym : {false, true}) {
                SolveOptions opts;
                opts.symmetry = sym;
                const auto r = solve(k, d, opts);
                CHECK(r.proven);
                CHECK(r.score == expect);
                const auto end = GameState::replay(k, d, r.line);
                CHECK(end.score() == r.score);
            }
        }
}

TEST_CASE("solve values")
{
    auto r = solve(2, 3);
    CHECK(r.proven);
    CHECK(r.score == 6);
    CHECK(r.line.size() == 5);
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto z = solve(1, d);
        CHECK(z.proven);
        CHECK(z.score == d + 1);
    }

    // (2, 4) both ways, and no larger than the exact optimum.
    r = solve(2, 4);
    SolveOptions sym;
    sym.symmetry = true;
    const auto rs = solve(2, 4, sym);
    CHECK(r.proven);
    CHECK(rs.proven);
    CHECK(r.score == rs.score);
    CHECK(r.score == 9);

    for (std::size_t d = 2; d <= 4; ++d)
        for (std::size_t k = 1; k <= d; ++k) {
            SearchConfig cfg;
            cfg.k = k;
            cfg.d = d;
            const auto exact = max_code(cfg);
            const auto game = solve(k, d);
            REQUIRE(exact.proven_optimal);
            REQUIRE(game.proven);
            CHECK(game.score <= exact.best_size);
        }
}

TEST_CASE("solve honours the budget")
{
    SolveOptions opts;
    opts.budget = std::chrono::milliseconds(50);
    const auto start = std::chrono::steady_clock::now();
    const auto r = solve(2, 7, opts);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
    CHECK(!r.proven);
    CHECK(r.score >= 1);
    CHECK(GameState::replay(2, 7, r.line).score() == r.score);

    opts.symmetry = true;
    CHECK_THROWS_AS(solve(2, 7, opts), DomainError);
    CHECK_THROWS_AS(solve(2, 17), DomainError);
}

TEST_CASE("hint")
{
    const GameState end = GameState::replay(2, 3, figure5);
    CHECK(!hint(end, std::chrono::seconds(1)));

    const GameState start(2, 3);
    const auto h = hint(start, std::chrono::seconds(5));
    REQUIRE(h);
    CHECK(*h == Move{0, 1});  // lowest (index, position) among equally good moves
    CHECK(solve_from(start.apply(*h)).score == 6);

    // Following hints from any reachable position stays legal and never
    // loses the best reachable score.
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
        GameState s(2, 3);
        const std::size_t random_moves = rng() % 3;
        for (std::size_t i = 0; i < random_moves && !s.terminal(); ++i) {
            const auto moves = s.legal_moves();
            s = s.apply(moves[rng() % moves.size()]);
        }
        const std::size_t target = solve_from(s).score;
        while (auto m = hint(s, std::chrono::seconds(5))) {
            CHECK(!s.check(*m));
            s = s.apply(*m);
        }
        CHECK(s.score() == target);
    }
}
