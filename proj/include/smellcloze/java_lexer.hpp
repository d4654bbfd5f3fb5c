#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace smellcloze::java {

enum class TokenKind {
    Identifier,
    Keyword,
    Literal,
    Operator,
    EndOfFile,
};

// A token is a view into the source it was lexed from; the source must
// outlive the token vector.
struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string_view text;
    std::size_t begin = 0; // byte offsets, [begin, end)
    std::size_t end = 0;
    int line = 1;          // 1-based line of the first byte
    int end_line = 1;      // 1-based line of the last byte

    bool is(std::string_view s) const noexcept { return kind != TokenKind::Literal && text == s; }
    bool is_identifier() const noexcept { return kind == TokenKind::Identifier; }
};

// Splits Java source into tokens, dropping whitespace and comments.
// '>' is always emitted as a single-character token so that nested generic
// closers ("List<List<T>>") need no splitting later; shift operators come
// out as runs of '>'. The final token is always EndOfFile.
//
// Throws SyntaxError for unterminated comments, strings, char literals and
// text blocks.
std::vector<Token> tokenize(std::string_view source, const std::string& path = "<input>");

bool is_keyword(std::string_view word) noexcept;

} // namespace smellcloze::java
