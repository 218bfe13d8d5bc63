#include "nbox/splitting_game.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

namespace nbox {

std::pair<TernaryString, TernaryString> split(const TernaryString& v, std::size_t position)
{
    if (position == 0 || position > v.width())
        throw DomainError("split: position " + std::to_string(position) + " outside 1.." + std::to_string(v.width()));
    if (v[position - 1] != Symbol::Joker)
        throw DomainError("split: position " + std::to_string(position) + " of " + v.to_string() + " is not a joker");
    TernaryString zero = v;
    TernaryString one = v;
    zero.set(position - 1, Symbol::Zero);
    one.set(position - 1, Symbol::One);
    return {std::move(zero), std::move(one)};
}

IllegalMove::IllegalMove(MoveRejection rejection)
    : Error("illegal move: " + rejection.reason), rejection_(std::move(rejection))
{
}

GameState::GameState(std::size_t k, std::size_t d) : k_(k), d_(d), code_(d)
{
    if (d == 0 || k == 0 || k > d)
        throw DomainError("splitting game needs 1 <= k <= d");
    code_.push_back(TernaryString(d));
}

std::optional<MoveRejection> GameState::check(const Move& m) const
{
    if (m.string_index >= code_.size())
        return MoveRejection{"no entry " + std::to_string(m.string_index), std::nullopt, 0};
    const TernaryString& v = code_[m.string_index];
    if (m.position == 0 || m.position > d_ || v[m.position - 1] != Symbol::Joker)
        return MoveRejection{"entry " + std::to_string(m.string_index) + " has no joker at position " +
                                 std::to_string(m.position),
                             std::nullopt, 0};

    const auto [zero, one] = split(v, m.position);
    for (std::size_t j = 0; j < code_.size(); ++j) {
        if (j == m.string_index)
            continue;
        for (const TernaryString* child : {&zero, &one}) {
            const std::size_t dd = dist(*child, code_[j]);
            if (dd < 1 || dd > k_)
                return MoveRejection{child->to_string() + " and " + code_[j].to_string() + " at distance " +
                                         std::to_string(dd),
                                     std::make_pair(m.string_index, j), dd};
        }
    }
    // The two children differ exactly at `position`.
    return std::nullopt;
}

std::vector<Move> GameState::legal_moves() const
{
    std::vector<Move> out;
    for (std::size_t i = 0; i < code_.size(); ++i)
        for (std::size_t p = 1; p <= d_; ++p)
            if (code_[i][p - 1] == Symbol::Joker && !check(Move{i, p}))
                out.push_back(Move{i, p});
    return out;
}

GameState GameState::apply(const Move& m) const
{
    if (auto r = check(m))
        throw IllegalMove(std::move(*r));
    auto [zero, one] = split(code_[m.string_index], m.position);
    GameState next = *this;
    std::vector<TernaryString> strings;
    strings.reserve(code_.size() + 1);
    for (std::size_t i = 0; i < code_.size(); ++i)
        if (i != m.string_index)
            strings.push_back(code_[i]);
    strings.push_back(std::move(zero));
    strings.push_back(std::move(one));
    next.code_ = CodeList(d_, std::move(strings));
    next.history_.push_back(m);
    return next;
}

GameState GameState::undo() const
{
    if (history_.empty())
        throw DomainError("undo: no move to undo");
    const Move m = history_.back();
    const std::size_t n = code_.size();
    TernaryString parent = code_[n - 2];
    parent.set(m.position - 1, Symbol::Joker);

    GameState prev = *this;
    std::vector<TernaryString> strings(code_.begin(), code_.end() - 2);
    strings.insert(strings.begin() + static_cast<std::ptrdiff_t>(m.string_index), std::move(parent));
    prev.code_ = CodeList(d_, std::move(strings));
    prev.history_.pop_back();
    return prev;
}

GameState GameState::replay(std::size_t k, std::size_t d, const std::vector<Move>& moves)
{
    GameState s(k, d);
    for (const auto& m : moves)
        s = s.apply(m);
    return s;
}

// ---------------------------------------------------------------------------
// Search

namespace {

// def in the high half, value in the low half; widths up to 16.
using Packed = std::uint32_t;

Packed pack(const TernaryString& s)
{
    return static_cast<Packed>((s.defined_words()[0] << 16) | s.value_words()[0]);
}

inline std::uint32_t def_of(Packed p) { return p >> 16; }
inline std::uint32_t val_of(Packed p) { return p & 0xffffu; }

inline int packed_dist(Packed a, Packed b)
{
    return std::popcount(def_of(a) & def_of(b) & (val_of(a) ^ val_of(b)));
}

struct KeyHash {
    std::size_t operator()(const std::vector<Packed>& v) const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (Packed p : v) {
            h ^= p;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Canonical form under coordinate permutations and 0/1 swaps.
class SymmetryCanon {
public:
    explicit SymmetryCanon(std::size_t d) : d_(d)
    {
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        const std::size_t masks = std::size_t{1} << d;
        do {
            std::vector<std::uint32_t> table(masks);
            for (std::size_t m = 0; m < masks; ++m) {
                std::uint32_t out = 0;
                for (std::size_t i = 0; i < d; ++i)
                    if (m & (std::size_t{1} << i))
                        out |= std::uint32_t{1} << perm[i];
                table[m] = out;
            }
            tables_.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<Packed> canonical(const std::vector<Packed>& code) const
    {
        std::vector<Packed> best;
        std::vector<Packed> t(code.size());
        const std::uint32_t masks = std::uint32_t{1} << d_;
        for (std::uint32_t flip = 0; flip < masks; ++flip)
            for (const auto& table : tables_) {
                for (std::size_t i = 0; i < code.size(); ++i) {
                    const std::uint32_t def = def_of(code[i]);
                    const std::uint32_t val = val_of(code[i]) ^ (flip & def);
                    t[i] = (table[def] << 16) | table[val];
                }
                std::sort(t.begin(), t.end());
                if (best.empty() || t < best)
                    best = t;
            }
        return best;
    }

private:
    std::size_t d_;
    std::vector<std::vector<std::uint32_t>> tables_;
};

class GameSearch {
public:
    GameSearch(std::size_t k, std::size_t d, const SolveOptions& opts)
        : k_(k), d_(d), deadline_(std::chrono::steady_clock::now() + opts.budget)
    {
        if (opts.symmetry)
            canon_.emplace(d);
    }

    SolveResult run(std::vector<Packed> start)
    {
        best_ = start.size();
        dfs(start);
        SolveResult r;
        r.score = best_;
        r.line = best_line_;
        r.proven = !aborted_;
        r.positions = positions_;
        return r;
    }

private:
    std::vector<Packed> key(const std::vector<Packed>& code) const
    {
        if (canon_)
            return canon_->canonical(code);
        std::vector<Packed> sorted = code;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }

    bool legal(const std::vector<Packed>& code, std::size_t idx, Packed zero, Packed one) const
    {
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (j == idx)
                continue;
            for (Packed child : {zero, one}) {
                const int dd = packed_dist(child, code[j]);
                if (dd < 1 || dd > static_cast<int>(k_))
                    return false;
            }
        }
        return true;
    }

    void dfs(const std::vector<Packed>& code)
    {
        if (aborted_)
            return;
        if (!seen_.insert(key(code)).second)
            return;
        if (++positions_ % 1024 == 0 && std::chrono::steady_clock::now() >= deadline_) {
            aborted_ = true;
            return;
        }
        if (code.size() > best_) {
            best_ = code.size();
            best_line_ = path_;
        }

        const std::uint32_t full = (std::uint32_t{1} << d_) - 1;
        for (std::size_t idx = 0; idx < code.size(); ++idx) {
            const std::uint32_t free = full & ~def_of(code[idx]);
            for (std::size_t p = 0; p < d_; ++p) {
                if (!(free & (std::uint32_t{1} << p)))
                    continue;
                const Packed bit = Packed{1} << p;
                const Packed zero = code[idx] | (bit << 16);
                const Packed one = zero | bit;
                if (!legal(code, idx, zero, one))
                    continue;
                std::vector<Packed> next;
                next.reserve(code.size() + 1);
                for (std::size_t j = 0; j < code.size(); ++j)
                    if (j != idx)
                        next.push_back(code[j]);
                next.push_back(zero);
                next.push_back(one);
                path_.push_back(Move{idx, p + 1});
                dfs(next);
                path_.pop_back();
                if (aborted_)
                    return;
            }
        }
    }

    std::size_t k_;
    std::size_t d_;
    std::chrono::steady_clock::time_point deadline_;
    std::optional<SymmetryCanon> canon_;
    std::unordered_set<std::vector<Packed>, KeyHash> seen_;
    std::vector<Move> path_;
    std::vector<Move> best_line_;
    std::size_t best_ = 0;
    std::uint64_t positions_ = 0;
    bool aborted_ = false;
};

}  // namespace

SolveResult solve_from(const GameState& from, const SolveOptions& opts)
{
    if (from.d() > 16)
        throw DomainError("game search supports widths up to 16");
    if (opts.symmetry && from.d() > 6)
        throw DomainError("symmetry reduction in game search supports widths up to 6");
    std::vector<Packed> start;
    for (const auto& s : from.code())
        start.push_back(pack(s));
    GameSearch search(from.k(), from.d(), opts);
    return search.run(std::move(start));
}

SolveResult solve(std::size_t k, std::size_t d, const SolveOptions& opts)
{
    return solve_from(GameState(k, d), opts);
}

std::optional<Move> hint(const GameState& s, std::chrono::milliseconds budget)
{
    const auto moves = s.legal_moves();
    if (moves.empty())
        return std::nullopt;
    SolveOptions opts;
    opts.budget = budget;
    const auto r = solve_from(s, opts);
    // The search tries moves in (index, position) order and keeps only strict
    // improvements, so line[0] is the lowest move reaching the best score.
    if (!r.line.empty())
        return r.line.front();
    return moves.front();
}

}  // namespace nbox
