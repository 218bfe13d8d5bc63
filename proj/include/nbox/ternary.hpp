#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nbox {

/// One coordinate of a code word. Text form is '0', '1' or '*'.
enum class Symbol : std::uint8_t { Zero, One, Joker };

char to_char(Symbol s);
Symbol symbol_from_char(char c);

/// A word over {0, 1, *}.
///
/// Stored as two bit planes: a "defined" plane (bit set for 0 or 1) and a
/// "value" plane (bit set for 1). Value bits are only ever set under defined
/// bits, so the joker-aware distance is popcount(def_u & def_v & (val_u ^ val_v)).
/// A width-0 word exists only as the neutral element of concatenation; parse()
/// never produces one.
class TernaryString {
public:
    TernaryString() = default;
    explicit TernaryString(std::size_t width, Symbol fill = Symbol::Joker);

    /// Throws ParseError on an empty string or a character outside "01*".
    static TernaryString parse(std::string_view text);

    std::size_t width() const noexcept { return width_; }
    Symbol operator[](std::size_t i) const noexcept;
    void set(std::size_t i, Symbol s) noexcept;

    /// Number of positions holding 0 or 1.
    std::size_t defined_count() const noexcept;
    bool has_joker() const noexcept { return defined_count() < width_; }

    std::string to_string() const;

    std::span<const std::uint64_t> defined_words() const noexcept { return def_; }
    std::span<const std::uint64_t> value_words() const noexcept { return val_; }

    /// String concatenation: this followed by `tail`.
    TernaryString operator+(const TernaryString& tail) const;

    bool operator==(const TernaryString& other) const noexcept = default;
    /// Lexicographic in text order ('*' < '0' < '1').
    std::strong_ordering operator<=>(const TernaryString& other) const noexcept;

    std::size_t hash() const noexcept;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> def_;
    std::vector<std::uint64_t> val_;
};

struct TernaryStringHash {
    std::size_t operator()(const TernaryString& s) const noexcept { return s.hash(); }
};

/// Number of positions where u and v hold different binary digits.
/// Throws LengthMismatch if the widths differ.
std::size_t dist(const TernaryString& u, const TernaryString& v);

/// An ordered list of equal-width strings. Duplicates are allowed; size()
/// counts positions. An empty list still carries a width so that the list
/// algebra stays well defined on it.
class CodeList {
public:
    CodeList() = default;
    explicit CodeList(std::size_t width) : width_(width) {}
    CodeList(std::size_t width, std::vector<TernaryString> strings);

    /// Builds a list from text entries; all entries must share one width.
    static CodeList parse(std::initializer_list<std::string_view> entries);
    static CodeList parse(const std::vector<std::string>& entries);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return strings_.size(); }
    bool empty() const noexcept { return strings_.empty(); }

    const TernaryString& operator[](std::size_t i) const { return strings_[i]; }
    const std::vector<TernaryString>& strings() const noexcept { return strings_; }
    auto begin() const noexcept { return strings_.begin(); }
    auto end() const noexcept { return strings_.end(); }

    /// Throws LengthMismatch if `s` has the wrong width.
    void push_back(TernaryString s);
    void reserve(std::size_t n) { strings_.reserve(n); }

    std::vector<std::string> to_strings() const;

    bool operator==(const CodeList& other) const = default;

private:
    std::size_t width_ = 0;
    std::vector<TernaryString> strings_;
};

/// An index pair (first < second) whose distance breaks a neighborliness
/// requirement.
struct PairViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t distance = 0;

    bool operator==(const PairViolation&) const = default;
};

struct NeighborlyVerdict {
    std::optional<PairViolation> violation;

    bool ok() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Checks 1 <= dist(u, v) <= k for every pair. Reports the first failing
/// pair in (first, second) lexicographic order. Throws DomainError on an
/// empty code or k == 0.
NeighborlyVerdict is_k_neighborly(const CodeList& code, std::size_t k);

/// Checks dist(u, v) <= max_distance for every pair (no lower bound). Used for
/// the A-list conditions of nice triples.
NeighborlyVerdict max_pairwise_distance_at_most(const CodeList& code, std::size_t max_distance);

/// Factors of a normalized box: [0, 1/2], [1/2, 1] or [0, 1].
enum class Interval : std::uint8_t { Lower, Upper, Full };

struct NormalizedBox {
    std::vector<Interval> factors;

    std::size_t dimension() const noexcept { return factors.size(); }
    bool operator==(const NormalizedBox&) const = default;
};

/// Endpoints of an interval in units of 1/2: Lower = [0, 1], Upper = [1, 2],
/// Full = [0, 2].
std::pair<int, int> interval_half_units(Interval f) noexcept;

NormalizedBox to_box(const TernaryString& s);
TernaryString from_box(const NormalizedBox& box);
std::vector<NormalizedBox> to_boxes(const CodeList& code);

/// Dimension of the intersection of two boxes of equal dimension, computed
/// from interval endpoints: the number of factors whose overlap has positive
/// length. Normalized boxes always meet (at least in the point 1/2).
std::size_t intersection_dimension(const NormalizedBox& a, const NormalizedBox& b);

}  // namespace nbox
