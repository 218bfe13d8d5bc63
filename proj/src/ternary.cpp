#include "nbox/ternary.hpp"

#include "nbox/error.hpp"
#include "nbox/kernels.hpp"

#include <algorithm>
#include <bit>

namespace nbox {

namespace {

constexpr std::size_t words_for(std::size_t width) noexcept { return (width + 63) / 64; }

// '*' < '0' < '1' in ASCII; rank symbols the same way.
constexpr int text_rank(Symbol s) noexcept
{
    switch (s) {
    case Symbol::Joker: return 0;
    case Symbol::Zero: return 1;
    case Symbol::One: return 2;
    }
    return 0;
}

}  // namespace

char to_char(Symbol s)
{
    switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Joker: return '*';
    }
    return '?';
}

Symbol symbol_from_char(char c)
{
    switch (c) {
    case '0': return Symbol::Zero;
    case '1': return Symbol::One;
    case '*': return Symbol::Joker;
    default: throw ParseError(std::string("invalid symbol '") + c + "' (expected 0, 1 or *)");
    }
}

TernaryString::TernaryString(std::size_t width, Symbol fill)
    : width_(width), def_(words_for(width), 0), val_(words_for(width), 0)
{
    if (fill != Symbol::Joker)
        for (std::size_t i = 0; i < width; ++i)
            set(i, fill);
}

TernaryString TernaryString::parse(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty string");
    TernaryString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
        s.set(i, symbol_from_char(text[i]));
    return s;
}

Symbol TernaryString::operator[](std::size_t i) const noexcept
{
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    const std::size_t w = i / 64;
    if (!(def_[w] & bit))
        return Symbol::Joker;
    return (val_[w] & bit) ? Symbol::One : Symbol::Zero;
}

void TernaryString::set(std::size_t i, Symbol s) noexcept
{
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    const std::size_t w = i / 64;
    def_[w] &= ~bit;
    val_[w] &= ~bit;
    if (s != Symbol::Joker)
        def_[w] |= bit;
    if (s == Symbol::One)
        val_[w] |= bit;
}

std::size_t TernaryString::defined_count() const noexcept
{
    std::size_t n = 0;
    for (auto w : def_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string TernaryString::to_string() const
{
    std::string out(width_, '*');
    for (std::size_t i = 0; i < width_; ++i)
        out[i] = to_char((*this)[i]);
    return out;
}

TernaryString TernaryString::operator+(const TernaryString& tail) const
{
    TernaryString out(width_ + tail.width_);
    std::copy(def_.begin(), def_.end(), out.def_.begin());
    std::copy(val_.begin(), val_.end(), out.val_.begin());
    const std::size_t shift = width_ % 64;
    const std::size_t base = width_ / 64;
    for (std::size_t w = 0; w < tail.def_.size(); ++w) {
        out.def_[base + w] |= tail.def_[w] << shift;
        out.val_[base + w] |= tail.val_[w] << shift;
        if (shift != 0 && base + w + 1 < out.def_.size()) {
            out.def_[base + w + 1] |= tail.def_[w] >> (64 - shift);
            out.val_[base + w + 1] |= tail.val_[w] >> (64 - shift);
        }
    }
    return out;
}

std::strong_ordering TernaryString::operator<=>(const TernaryString& other) const noexcept
{
    const std::size_t n = std::min(width_, other.width_);
    for (std::size_t i = 0; i < n; ++i) {
        const int a = text_rank((*this)[i]);
        const int b = text_rank(other[i]);
        if (a != b)
            return a <=> b;
    }
    return width_ <=> other.width_;
}

std::size_t TernaryString::hash() const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
    for (std::size_t w = 0; w < def_.size(); ++w) {
        h ^= def_[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= val_[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::size_t dist(const TernaryString& u, const TernaryString& v)
{
    if (u.width() != v.width())
        throw LengthMismatch("dist: widths " + std::to_string(u.width()) + " and " +
                             std::to_string(v.width()) + " differ");
    const auto ud = u.defined_words();
    const auto uv = u.value_words();
    const auto vd = v.defined_words();
    const auto vv = v.value_words();
    std::size_t n = 0;
    for (std::size_t w = 0; w < ud.size(); ++w)
        n += static_cast<std::size_t>(std::popcount(ud[w] & vd[w] & (uv[w] ^ vv[w])));
    return n;
}

CodeList::CodeList(std::size_t width, std::vector<TernaryString> strings)
    : width_(width), strings_(std::move(strings))
{
    for (const auto& s : strings_)
        if (s.width() != width_)
            throw LengthMismatch("list of width " + std::to_string(width_) + " given a string of width " +
                                 std::to_string(s.width()));
}

CodeList CodeList::parse(std::initializer_list<std::string_view> entries)
{
    CodeList out;
    for (auto e : entries)
        out.push_back(TernaryString::parse(e));
    return out;
}

CodeList CodeList::parse(const std::vector<std::string>& entries)
{
    CodeList out;
    for (const auto& e : entries)
        out.push_back(TernaryString::parse(e));
    return out;
}

void CodeList::push_back(TernaryString s)
{
    if (strings_.empty() && width_ == 0)
        width_ = s.width();
    if (s.width() != width_)
        throw LengthMismatch("list of width " + std::to_string(width_) + " given a string of width " +
                             std::to_string(s.width()));
    strings_.push_back(std::move(s));
}

std::vector<std::string> CodeList::to_strings() const
{
    std::vector<std::string> out;
    out.reserve(strings_.size());
    for (const auto& s : strings_)
        out.push_back(s.to_string());
    return out;
}

namespace {

// Scans pairs (i, j), i < j, in order and returns the first whose distance
// falls outside [lo, hi].
NeighborlyVerdict scan_pairs(const CodeList& code, std::size_t lo, std::size_t hi)
{
    const kernels::PackedPlanes planes(code.strings(), code.width());
    std::vector<std::uint32_t> row;
    for (std::size_t i = 0; i + 1 < code.size(); ++i) {
        planes.distances_from(i, i + 1, row);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] < lo || row[j] > hi)
                return {PairViolation{i, i + 1 + j, row[j]}};
    }
    return {};
}

}  // namespace

NeighborlyVerdict is_k_neighborly(const CodeList& code, std::size_t k)
{
    if (code.empty())
        throw DomainError("is_k_neighborly: empty code");
    if (k == 0)
        throw DomainError("is_k_neighborly: k must be positive");
    return scan_pairs(code, 1, k);
}

NeighborlyVerdict max_pairwise_distance_at_most(const CodeList& code, std::size_t max_distance)
{
    return scan_pairs(code, 0, max_distance);
}

std::pair<int, int> interval_half_units(Interval f) noexcept
{
    switch (f) {
    case Interval::Lower: return {0, 1};
    case Interval::Upper: return {1, 2};
    case Interval::Full: return {0, 2};
    }
    return {0, 2};
}

NormalizedBox to_box(const TernaryString& s)
{
    NormalizedBox box;
    box.factors.reserve(s.width());
    for (std::size_t i = 0; i < s.width(); ++i) {
        switch (s[i]) {
        case Symbol::Zero: box.factors.push_back(Interval::Lower); break;
        case Symbol::One: box.factors.push_back(Interval::Upper); break;
        case Symbol::Joker: box.factors.push_back(Interval::Full); break;
        }
    }
    return box;
}

TernaryString from_box(const NormalizedBox& box)
{
    TernaryString s(box.dimension());
    for (std::size_t i = 0; i < box.dimension(); ++i) {
        switch (box.factors[i]) {
        case Interval::Lower: s.set(i, Symbol::Zero); break;
        case Interval::Upper: s.set(i, Symbol::One); break;
        case Interval::Full: s.set(i, Symbol::Joker); break;
        }
    }
    return s;
}

std::vector<NormalizedBox> to_boxes(const CodeList& code)
{
    std::vector<NormalizedBox> out;
    out.reserve(code.size());
    for (const auto& s : code)
        out.push_back(to_box(s));
    return out;
}

std::size_t intersection_dimension(const NormalizedBox& a, const NormalizedBox& b)
{
    if (a.dimension() != b.dimension())
        throw LengthMismatch("intersection_dimension: boxes of different dimension");
    std::size_t dim = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const auto [alo, ahi] = interval_half_units(a.factors[i]);
        const auto [blo, bhi] = interval_half_units(b.factors[i]);
        if (std::min(ahi, bhi) - std::max(alo, blo) > 0)
            ++dim;
    }
    return dim;
}

}  // namespace nbox
