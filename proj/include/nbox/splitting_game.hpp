#pragma once

#include "nbox/error.hpp"
#include "nbox/ternary.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nbox {

/// Split entry `string_index` (0-based) at coordinate `position` (1-based).
struct Move {
    std::size_t string_index = 0;
    std::size_t position = 1;

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;
};

/// Replaces the joker at `position` (1-based) by 0 and by 1. Throws
/// DomainError if that coordinate is not a joker or out of range.
std::pair<TernaryString, TernaryString> split(const TernaryString& v, std::size_t position);

/// Why a move was rejected. `pair` names the split entry and the entry it
/// clashes with, both as indices into the code before the move, and
/// `distance` is the offending child's distance to the other entry.
struct MoveRejection {
    std::string reason;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    std::size_t distance = 0;
};

class IllegalMove : public Error {
public:
    explicit IllegalMove(MoveRejection rejection);
    const MoveRejection& rejection() const noexcept { return rejection_; }

private:
    MoveRejection rejection_;
};

/// A position of the splitting game. Immutable: apply() and undo() return
/// new states.
class GameState {
public:
    /// The all-joker start position. Throws DomainError unless 1 <= k <= d.
    GameState(std::size_t k, std::size_t d);

    std::size_t k() const noexcept { return k_; }
    std::size_t d() const noexcept { return d_; }
    const CodeList& code() const noexcept { return code_; }
    const std::vector<Move>& history() const noexcept { return history_; }
    std::size_t score() const noexcept { return code_.size(); }

    /// Legal moves in (index, position) order.
    std::vector<Move> legal_moves() const;
    bool terminal() const { return legal_moves().empty(); }

    /// nullopt if `m` is legal, otherwise the reason.
    std::optional<MoveRejection> check(const Move& m) const;

    /// Removes the split entry and appends its two children (0-child first).
    /// Throws IllegalMove.
    GameState apply(const Move& m) const;

    /// Reverses the last move. Throws DomainError at the start position.
    GameState undo() const;

    /// Replays `moves` from the start position. Throws IllegalMove.
    static GameState replay(std::size_t k, std::size_t d, const std::vector<Move>& moves);

    bool operator==(const GameState&) const = default;

private:
    std::size_t k_;
    std::size_t d_;
    CodeList code_;
    std::vector<Move> history_;
};

struct SolveOptions {
    std::chrono::milliseconds budget{std::chrono::seconds(60)};
    /// Identify positions equal up to coordinate permutations and 0/1 swaps.
    bool symmetry = false;
};

struct SolveResult {
    std::size_t score = 0;
    std::vector<Move> line;  // from the solved position to a best code
    bool proven = false;
    std::uint64_t positions = 0;
};

/// Largest code reachable from `from`, by depth-first search over play lines
/// with a transposition set keyed on the code as a sorted multiset. `proven`
/// is true when the search finished within budget. Widths up to 16.
SolveResult solve_from(const GameState& from, const SolveOptions& opts = {});

/// solve_from on the start position. Exhaustive play is meant for d <= 5;
/// larger widths run until the budget expires.
SolveResult solve(std::size_t k, std::size_t d, const SolveOptions& opts = {});

/// A legal move whose best reachable score (searched within `budget`) is
/// maximal; ties go to the lowest index, then the lowest position. nullopt
/// at terminal positions.
std::optional<Move> hint(const GameState& s, std::chrono::milliseconds budget);

}  // namespace nbox
