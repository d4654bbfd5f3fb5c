#include "smellcloze/java_lexer.hpp"

#include "smellcloze/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace smellcloze::java {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",      "byte",     "case",         "catch",
    "char",     "class",      "const",     "continue",   "default",  "do",           "double",
    "else",     "enum",       "extends",   "final",      "finally",  "float",        "for",
    "goto",     "if",         "implements", "import",    "instanceof", "int",        "interface",
    "long",     "native",     "new",       "package",    "private",  "protected",    "public",
    "return",   "short",      "static",    "strictfp",   "super",    "switch",       "synchronized",
    "this",     "throw",      "throws",    "transient",  "try",      "void",         "volatile",
    "while",    "true",       "false",     "null",
};

// Longest match first.
constexpr std::array<std::string_view, 36> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=",
    "*=",  "/=",  "&=", "|=", "^=", "%=", "<<", "(",  ")",  "{",  "}",  "[",  "]",  ";",
    ",",   ".",   "@",  "=",  "<",  ">",  "?",  ":",
};

constexpr std::string_view kSingleOps = "!~+-*/&|^%";

bool ident_start(unsigned char c) noexcept {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) noexcept {
    return ident_start(c) || std::isdigit(c);
}

class Lexer {
public:
    Lexer(std::string_view src, const std::string& path) : src_(src), path_(path) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        // UTF-8 byte order mark
        if (src_.substr(0, 3) == "\xEF\xBB\xBF")
            pos_ = 3;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size())
                break;
            out.push_back(next());
        }
        Token eof;
        eof.kind = TokenKind::EndOfFile;
        eof.begin = eof.end = src_.size();
        eof.line = eof.end_line = line_;
        out.push_back(eof);
        return out;
    }

private:
    [[noreturn]] void fail(int line, const std::string& what) const {
        throw SyntaxError(path_, line, what);
    }

    char peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() noexcept {
        if (src_[pos_] == '\n')
            ++line_;
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                int start = line_;
                pos_ += 2;
                while (true) {
                    if (pos_ + 1 >= src_.size())
                        fail(start, "unterminated block comment");
                    if (src_[pos_] == '*' && src_[pos_ + 1] == '/') {
                        pos_ += 2;
                        break;
                    }
                    advance();
                }
            } else {
                break;
            }
        }
    }

    Token make(TokenKind kind, std::size_t begin, int line) const {
        Token t;
        t.kind = kind;
        t.begin = begin;
        t.end = pos_;
        t.text = src_.substr(begin, pos_ - begin);
        t.line = line;
        t.end_line = line_;
        return t;
    }

    Token next() {
        std::size_t begin = pos_;
        int line = line_;
        auto c = static_cast<unsigned char>(src_[pos_]);

        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            auto word = src_.substr(begin, pos_ - begin);
            return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, begin, line);
        }
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            lex_number(begin);
            return make(TokenKind::Literal, begin, line);
        }
        if (c == '"') {
            if (peek(1) == '"' && peek(2) == '"')
                lex_text_block(line);
            else
                lex_quoted('"', line);
            return make(TokenKind::Literal, begin, line);
        }
        if (c == '\'') {
            lex_quoted('\'', line);
            return make(TokenKind::Literal, begin, line);
        }
        for (auto op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                pos_ += op.size();
                return make(TokenKind::Operator, begin, line);
            }
        }
        if (kSingleOps.find(static_cast<char>(c)) != std::string_view::npos) {
            ++pos_;
            return make(TokenKind::Operator, begin, line);
        }
        fail(line, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }

    void lex_number(std::size_t begin) {
        auto head = src_.substr(begin, 2);
        bool hex = head == "0x" || head == "0X";
        // Permissive: digits, letters (hex, suffixes, exponents), '_' and '.',
        // plus a sign directly after an exponent marker.
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else if (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                ++pos_;
            } else if (c == '.' && !(peek(1) == '.')) {
                // "1." is a valid double literal
                ++pos_;
            } else if ((c == '+' || c == '-') && pos_ > 0) {
                char prev = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_ - 1])));
                if ((prev == 'e' && !hex) || (prev == 'p' && hex))
                    ++pos_;
                else
                    break;
            } else {
                break;
            }
        }
    }

    void lex_quoted(char quote, int start_line) {
        ++pos_;
        while (true) {
            if (pos_ >= src_.size() || src_[pos_] == '\n')
                fail(start_line, quote == '"' ? "unterminated string literal" : "unterminated char literal");
            char c = src_[pos_];
            if (c == '\\') {
                pos_ += 2;
                continue;
            }
            ++pos_;
            if (c == quote)
                return;
        }
    }

    void lex_text_block(int start_line) {
        pos_ += 3;
        while (true) {
            if (pos_ >= src_.size())
                fail(start_line, "unterminated text block");
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
                advance();
                advance();
                continue;
            }
            if (src_.substr(pos_, 3) == "\"\"\"") {
                pos_ += 3;
                return;
            }
            advance();
        }
    }

    std::string_view src_;
    const std::string& path_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

bool is_keyword(std::string_view word) noexcept {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source, const std::string& path) {
    return Lexer(source, path).run();
}

} // namespace smellcloze::java
