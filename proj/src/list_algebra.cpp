#include "nbox/list_algebra.hpp"

#include "nbox/error.hpp"

#include <string>

namespace nbox {

CodeList pairing(const CodeList& a, const CodeList& b)
{
    if (a.size() != b.size())
        throw SizeMismatch("pairing: lists of sizes " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
    CodeList out(a.width() + b.width());
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a[i] + b[i]);
    return out;
}

CodeList concat(const CodeList& a, const CodeList& b)
{
    CodeList out(a.width() + b.width());
    out.reserve(a.size() * b.size());
    for (const auto& u : a)
        for (const auto& v : b)
            out.push_back(u + v);
    return out;
}

CodeList sum(const CodeList& a, const CodeList& b)
{
    if (b.empty())
        return a;
    if (a.empty())
        return b;
    if (a.width() != b.width())
        throw LengthMismatch("sum: widths " + std::to_string(a.width()) + " and " + std::to_string(b.width()));
    std::vector<TernaryString> strings;
    strings.reserve(a.size() + b.size());
    strings.insert(strings.end(), a.begin(), a.end());
    strings.insert(strings.end(), b.begin(), b.end());
    return CodeList(a.width(), std::move(strings));
}

CodeList scalar(std::size_t times, const CodeList& a)
{
    if (times == 0)
        throw DomainError("scalar: repetition count must be positive");
    std::vector<TernaryString> strings;
    strings.reserve(times * a.size());
    for (std::size_t t = 0; t < times; ++t)
        strings.insert(strings.end(), a.begin(), a.end());
    return CodeList(a.width(), std::move(strings));
}

CodeList block(const std::vector<BlockRow>& rows)
{
    CodeList out;
    bool first = true;
    for (const auto& row : rows) {
        CodeList acc = word("");
        for (const auto& cell : row)
            acc = concat(acc, cell);
        if (!first && acc.width() != out.width())
            throw LengthMismatch("block: row widths " + std::to_string(out.width()) + " and " +
                                 std::to_string(acc.width()) + " differ");
        out = first ? std::move(acc) : sum(out, acc);
        first = false;
    }
    return out;
}

CodeList word(std::string_view text)
{
    TernaryString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
        s.set(i, symbol_from_char(text[i]));
    return CodeList(text.size(), {std::move(s)});
}

CodeList jokers(std::size_t width)
{
    return CodeList(width, {TernaryString(width)});
}

}  // namespace nbox
