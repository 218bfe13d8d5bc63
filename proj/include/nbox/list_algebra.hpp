#pragma once

#include "nbox/ternary.hpp"

#include <vector>

namespace nbox {

/// Entry-wise concatenation [a_i b_i]. Throws SizeMismatch if |a| != |b|.
CodeList pairing(const CodeList& a, const CodeList& b);

/// All products a_i b_j in row-major order over (i, j).
CodeList concat(const CodeList& a, const CodeList& b);

/// Entries of `a` followed by the entries of `b`. Throws LengthMismatch if
/// both are nonempty with different widths; an empty operand is neutral.
CodeList sum(const CodeList& a, const CodeList& b);

/// `a` repeated `times` times. Throws DomainError if times == 0.
CodeList scalar(std::size_t times, const CodeList& a);

/// One cell row of a block expression, concatenated left to right.
using BlockRow = std::vector<CodeList>;

/// Concatenates each row and sums the rows top to bottom. Throws
/// LengthMismatch if the rows end up with different widths.
CodeList block(const std::vector<BlockRow>& rows);

/// Single-entry list holding `text`; shorthand for block cells like [0] or [**].
CodeList word(std::string_view text);

/// [*^width].
CodeList jokers(std::size_t width);

}  // namespace nbox
