#pragma once

#include "nbox/covering.hpp"
#include "nbox/splitting_game.hpp"
#include "nbox/ternary.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace nbox::io {

/// Contents of a code file.
///
/// Format: UTF-8 text; lines starting with '#' are comments; the first other
/// line may be a header "k=<int> d=<int>"; every remaining non-empty line is
/// one string over "01*". All strings share one width, equal to d if given.
struct CodeFile {
    std::optional<std::size_t> k;
    std::optional<std::size_t> d;
    CodeList code;
};

/// Throws ParseError.
CodeFile read_code(std::istream& in);
CodeFile read_code_file(const std::string& path);

void write_code(std::ostream& out, const CodeList& code, std::optional<std::size_t> k);

/// Covering format: "n=<int>", then one line "X: i1 i2 ... | Y: j1 j2 ..."
/// per clique, vertices 1-based. Throws ParseError.
BipartiteCovering read_covering(std::istream& in);
BipartiteCovering read_covering_file(const std::string& path);

void write_covering(std::ostream& out, const BipartiteCovering& cov);

/// A serialized game: the code file of the current position (with header),
/// followed by a line "moves:" and one "(index, position)" pair per line.
/// Indices are 0-based, positions 1-based.
void write_game(std::ostream& out, const GameState& state);

/// Replays the stored moves and checks that they reproduce the stored code.
/// Throws ParseError or IllegalMove.
GameState read_game(std::istream& in);

}  // namespace nbox::io
