#include "gustl/lexer.hpp"

#include <array>
#include <cstddef>

namespace gustl {

namespace {

const std::array<std::string_view, 30> kReservedWords = {
    "process", "start", "stop", "state", "port", "const", "word",
    "procedure", "function", "do", "return", "on", "if", "then",
    "elseif", "else", "done", "while", "repeat", "times", "until",
    "next", "end", "pause", "or", "and", "not", "now", "after", "asm",
};

bool is_ident_start(uint32_t cp) {
    return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') || cp == '_';
}

bool is_ident_char(uint32_t cp) {
    return is_ident_start(cp) || (cp >= '0' && cp <= '9');
}

int hex_digit(uint32_t cp) {
    if (cp >= '0' && cp <= '9') return static_cast<int>(cp - '0');
    if (cp >= 'a' && cp <= 'f') return static_cast<int>(cp - 'a' + 10);
    if (cp >= 'A' && cp <= 'F') return static_cast<int>(cp - 'A' + 10);
    return -1;
}

// Streaming UTF-8 decoder over the source bytes, tracking 1-based
// line/column per code point. CR, LF and CRLF all count as one newline.
class Scanner {
public:
    explicit Scanner(std::string_view src) : src_(src) { advance(); }

    bool at_end() const { return !has_cp_; }
    uint32_t current() const { return cp_; }
    SourcePos pos() const { return cp_pos_; }
    size_t offset() const { return cp_offset_; }

    std::string_view slice(size_t from, size_t to) const {
        return src_.substr(from, to - from);
    }

    void advance() {
        if (has_cp_) {
            if (cp_ == '\n') {
                line_++;
                column_ = 1;
            } else if (cp_ == '\r') {
                // CRLF counts as a single newline; bare CR too.
                if (byte_offset_ >= src_.size() || src_[byte_offset_] != '\n') {
                    line_++;
                    column_ = 1;
                } // else the following LF does the bookkeeping
            } else {
                column_++;
            }
        }
        cp_offset_ = byte_offset_;
        cp_pos_ = {line_, column_};
        if (byte_offset_ >= src_.size()) {
            has_cp_ = false;
            cp_ = 0;
            return;
        }
        has_cp_ = true;
        cp_ = decode();
    }

private:
    [[noreturn]] void fail() const {
        throw CompileError({"E-LEX-UTF8", "invalid UTF-8 byte sequence", cp_pos_});
    }

    uint32_t decode() {
        uint8_t b0 = static_cast<uint8_t>(src_[byte_offset_++]);
        if (b0 < 0x80) return b0;
        int extra;
        uint32_t cp;
        if ((b0 & 0xe0) == 0xc0) {
            extra = 1;
            cp = b0 & 0x1f;
        } else if ((b0 & 0xf0) == 0xe0) {
            extra = 2;
            cp = b0 & 0x0f;
        } else if ((b0 & 0xf8) == 0xf0) {
            extra = 3;
            cp = b0 & 0x07;
        } else {
            fail();
        }
        for (int i = 0; i < extra; i++) {
            if (byte_offset_ >= src_.size()) fail();
            uint8_t b = static_cast<uint8_t>(src_[byte_offset_]);
            if ((b & 0xc0) != 0x80) fail();
            cp = (cp << 6) | (b & 0x3f);
            byte_offset_++;
        }
        // reject overlong encodings and surrogates
        static const uint32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
        if (cp < kMin[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) fail();
        return cp;
    }

    std::string_view src_;
    size_t byte_offset_ = 0;
    size_t cp_offset_ = 0;
    uint32_t cp_ = 0;
    bool has_cp_ = false;
    uint32_t line_ = 1;
    uint32_t column_ = 1;
    SourcePos cp_pos_{1, 1};
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : sc_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_whitespace_and_comments();
            if (sc_.at_end()) break;
            out.push_back(next_token());
        }
        Token eof;
        eof.kind = TokenKind::EndOfInput;
        eof.pos = sc_.pos();
        out.push_back(eof);
        return out;
    }

private:
    [[noreturn]] void error(std::string code, std::string msg, SourcePos pos) {
        throw CompileError({std::move(code), std::move(msg), pos});
    }

    void skip_whitespace_and_comments() {
        for (;;) {
            if (sc_.at_end()) return;
            uint32_t cp = sc_.current();
            if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') {
                sc_.advance();
                continue;
            }
            if (cp == '{') {
                SourcePos open = sc_.pos();
                sc_.advance();
                // comments do not nest: the first right brace closes
                while (!sc_.at_end() && sc_.current() != '}') sc_.advance();
                if (sc_.at_end())
                    error("E-LEX-COMMENT-EOF", "comment not terminated before end of input", open);
                sc_.advance();
                continue;
            }
            return;
        }
    }

    Token next_token() {
        SourcePos pos = sc_.pos();
        size_t start = sc_.offset();
        uint32_t cp = sc_.current();
        if (is_ident_start(cp)) return identifier(pos, start);
        if (cp >= '0' && cp <= '9') return number(pos, start);
        if (cp == '"') return string_token(pos, start);
        if (cp == '\'') return char_token(pos, start);
        if (cp == '}')
            error("E-LEX-STRAY-RBRACE", "right brace outside any comment", pos);
        return special(pos, start);
    }

    Token make(TokenKind kind, SourcePos pos, size_t start) {
        Token t;
        t.kind = kind;
        t.text = std::string(sc_.slice(start, sc_.offset()));
        t.pos = pos;
        return t;
    }

    Token identifier(SourcePos pos, size_t start) {
        while (!sc_.at_end() && is_ident_char(sc_.current())) sc_.advance();
        Token t = make(TokenKind::Identifier, pos, start);
        if (is_reserved_word(t.text)) t.kind = TokenKind::ReservedWord;
        return t;
    }

    Token number(SourcePos pos, size_t start) {
        uint64_t value = 0;
        bool overflow = false;
        if (sc_.current() == '0') {
            sc_.advance();
            if (!sc_.at_end() && sc_.current() == 'x') {
                sc_.advance();
                if (sc_.at_end() || hex_digit(sc_.current()) < 0)
                    error("E-LEX-NUM", "hexadecimal digits expected after 0x", pos);
                while (!sc_.at_end()) {
                    int d = hex_digit(sc_.current());
                    if (d < 0) break;
                    value = value * 16 + static_cast<uint64_t>(d);
                    if (value > 0xffffffffull) overflow = true;
                    sc_.advance();
                }
                if (overflow)
                    error("E-LEX-NUM-OVERFLOW", "number does not fit in a 32 bit word", pos);
                Token t = make(TokenKind::Number, pos, start);
                t.value = static_cast<uint32_t>(value);
                return t;
            }
        }
        while (!sc_.at_end() && sc_.current() >= '0' && sc_.current() <= '9') {
            value = value * 10 + (sc_.current() - '0');
            if (value > 0xffffffffull) overflow = true;
            sc_.advance();
        }
        if (overflow)
            error("E-LEX-NUM-OVERFLOW", "number does not fit in a 32 bit word", pos);
        Token t = make(TokenKind::Number, pos, start);
        t.value = static_cast<uint32_t>(value);
        return t;
    }

    Token string_token(SourcePos pos, size_t start) {
        sc_.advance(); // opening quote
        std::vector<uint32_t> words;
        for (;;) {
            if (sc_.at_end())
                error("E-LEX-STR-EOF", "string not terminated before end of input", pos);
            uint32_t cp = sc_.current();
            if (cp == '"') {
                sc_.advance();
                if (!sc_.at_end() && sc_.current() == '"') {
                    // a doubled quote stands for one quote character
                    words.push_back('"');
                    sc_.advance();
                    continue;
                }
                break;
            }
            words.push_back(cp);
            sc_.advance();
        }
        Token t = make(TokenKind::String, pos, start);
        t.words = std::move(words);
        return t;
    }

    Token char_token(SourcePos pos, size_t start) {
        sc_.advance(); // opening quote
        if (sc_.at_end() || sc_.current() == '\'' || sc_.current() == '\n' || sc_.current() == '\r')
            error("E-LEX-CHARLIT", "character notation needs exactly one character", pos);
        uint32_t cp = sc_.current();
        sc_.advance();
        if (sc_.at_end() || sc_.current() != '\'')
            error("E-LEX-CHARLIT", "character notation needs exactly one character", pos);
        sc_.advance();
        Token t = make(TokenKind::Number, pos, start);
        t.value = cp;
        return t;
    }

    Token special(SourcePos pos, size_t start) {
        uint32_t cp = sc_.current();
        switch (cp) {
        case '(': case ')': case ',': case '[': case ']': case '\\':
        case '!': case '?': case '=': case '$': case '+': case '-':
        case '|': case '^': case '*': case '&': case '/': case '%':
        case '~': case '#':
            sc_.advance();
            return make(TokenKind::SpecialSymbol, pos, start);
        case ':':
            sc_.advance();
            if (!sc_.at_end() && sc_.current() == '=') sc_.advance();
            return make(TokenKind::SpecialSymbol, pos, start);
        case '<':
            sc_.advance();
            if (!sc_.at_end() &&
                (sc_.current() == '<' || sc_.current() == '=' || sc_.current() == '>'))
                sc_.advance();
            return make(TokenKind::SpecialSymbol, pos, start);
        case '>':
            sc_.advance();
            if (!sc_.at_end() && (sc_.current() == '>' || sc_.current() == '='))
                sc_.advance();
            return make(TokenKind::SpecialSymbol, pos, start);
        default:
            error("E-LEX-CHAR", "character not valid outside strings and comments", pos);
        }
    }

    Scanner sc_;
};

} // namespace

bool is_reserved_word(std::string_view s) {
    for (auto w : kReservedWords)
        if (w == s) return true;
    return false;
}

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

std::string format_diagnostic(const Diagnostic& d) {
    return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column) + ": " +
           d.code + ": " + d.message;
}

} // namespace gustl
