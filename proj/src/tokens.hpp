#pragma once

// Line-aware tokenizer shared by the text formats ('#' comments, whitespace separated).

#include <homind/graph.hpp>

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace homind::detail {

struct Token {
    std::string text;
    int line;
};

inline std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        }
        else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        }
        else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        }
        else {
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' && text[j] != '\n' && text[j] != '#')
                ++j;
            out.push_back({std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    return out;
}

template <typename Error>
long long to_integer(const Token & tok)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw Error("line " + std::to_string(tok.line) + ": expected an integer, got '" + tok.text + "'");
    return value;
}

/// Parses one `n <int> m <int> <pairs>` block starting at tokens[pos]; advances pos.
Graph parse_graph_block(const std::vector<Token> & tokens, std::size_t & pos);

} // namespace homind::detail
