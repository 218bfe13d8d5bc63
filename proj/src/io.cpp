#include "nbox/io.hpp"

#include "nbox/error.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace nbox::io {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_count(std::string_view text, std::string_view what)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return in;
}

const std::regex header_re(R"(^k\s*=\s*(\d+)\s+d\s*=\s*(\d+)$)");

}  // namespace

CodeFile read_code(std::istream& in)
{
    CodeFile file;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (!seen_content) {
            seen_content = true;
            std::smatch m;
            if (std::regex_match(t, m, header_re)) {
                file.k = parse_count(m[1].str(), "k");
                file.d = parse_count(m[2].str(), "d");
                continue;
            }
        }
        TernaryString s;
        try {
            s = TernaryString::parse(t);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (file.d && s.width() != *file.d)
            throw ParseError("line " + std::to_string(line_no) + ": width " + std::to_string(s.width()) +
                             " but header says d=" + std::to_string(*file.d));
        if (!file.code.empty() && s.width() != file.code.width())
            throw ParseError("line " + std::to_string(line_no) + ": width " + std::to_string(s.width()) +
                             " differs from earlier width " + std::to_string(file.code.width()));
        file.code.push_back(std::move(s));
    }
    if (file.code.empty() && file.d)
        file.code = CodeList(*file.d);
    return file;
}

CodeFile read_code_file(const std::string& path)
{
    auto in = open(path);
    return read_code(in);
}

void write_code(std::ostream& out, const CodeList& code, std::optional<std::size_t> k)
{
    if (k)
        out << "k=" << *k << " d=" << code.width() << '\n';
    for (const auto& s : code)
        out << s.to_string() << '\n';
}

BipartiteCovering read_covering(std::istream& in)
{
    static const std::regex n_re(R"(^n\s*=\s*(\d+)$)");
    static const std::regex clique_re(R"(^X:\s*([\d\s]*)\|\s*Y:\s*([\d\s]*)$)");

    std::optional<std::size_t> n;
    std::vector<BipartiteClique> cliques;
    std::string line;
    std::size_t line_no = 0;
    auto vertices = [&](const std::string& text) {
        std::vector<std::size_t> out;
        std::istringstream ss(text);
        std::string tok;
        while (ss >> tok)
            out.push_back(parse_count(tok, "vertex"));
        return out;
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        std::smatch m;
        if (!n) {
            if (!std::regex_match(t, m, n_re))
                throw ParseError("line " + std::to_string(line_no) + ": expected 'n=<int>'");
            n = parse_count(m[1].str(), "n");
            continue;
        }
        if (!std::regex_match(t, m, clique_re))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'X: ... | Y: ...'");
        cliques.push_back(BipartiteClique{vertices(m[1].str()), vertices(m[2].str())});
    }
    if (!n)
        throw ParseError("covering file has no 'n=' line");
    try {
        return BipartiteCovering(*n, std::move(cliques));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

BipartiteCovering read_covering_file(const std::string& path)
{
    auto in = open(path);
    return read_covering(in);
}

void write_covering(std::ostream& out, const BipartiteCovering& cov)
{
    out << "n=" << cov.n_vertices() << '\n';
    for (const auto& c : cov.cliques()) {
        out << "X:";
        for (auto v : c.x)
            out << ' ' << v;
        out << " | Y:";
        for (auto v : c.y)
            out << ' ' << v;
        out << '\n';
    }
}

void write_game(std::ostream& out, const GameState& state)
{
    write_code(out, state.code(), state.k());
    out << "moves:\n";
    for (const auto& m : state.history())
        out << '(' << m.string_index << ", " << m.position << ")\n";
}

GameState read_game(std::istream& in)
{
    std::ostringstream code_part;
    std::string moves_part;
    std::string line;
    bool in_moves = false;
    while (std::getline(in, line)) {
        if (!in_moves && trim(line) == "moves:") {
            in_moves = true;
            continue;
        }
        if (in_moves)
            moves_part += line + '\n';
        else
            code_part << line << '\n';
    }
    if (!in_moves)
        throw ParseError("game file has no 'moves:' section");

    std::istringstream code_in(code_part.str());
    const CodeFile file = read_code(code_in);
    if (!file.k || !file.d)
        throw ParseError("game file needs a 'k=<int> d=<int>' header");

    static const std::regex move_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::vector<Move> moves;
    for (auto it = std::sregex_iterator(moves_part.begin(), moves_part.end(), move_re); it != std::sregex_iterator();
         ++it)
        moves.push_back(Move{parse_count((*it)[1].str(), "index"), parse_count((*it)[2].str(), "position")});

    GameState state = GameState::replay(*file.k, *file.d, moves);
    if (state.code() != file.code)
        throw ParseError("stored code does not match the replayed moves");
    return state;
}

}  // namespace nbox::io
