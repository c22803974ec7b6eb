#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gustl/diag.hpp"

namespace gustl {

enum class TokenKind {
    SpecialSymbol,
    ReservedWord,
    Identifier,
    Number,
    String,
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string text;             // source slice
    uint32_t value = 0;           // numeric value for Number tokens
    std::vector<uint32_t> words;  // code points for String tokens
    SourcePos pos;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_symbol(std::string_view t) const { return is(TokenKind::SpecialSymbol, t); }
    bool is_word(std::string_view t) const { return is(TokenKind::ReservedWord, t); }
};

bool is_reserved_word(std::string_view s);

// Converts UTF-8 source text into a token stream. The returned sequence
// always ends with a single EndOfInput token. Throws CompileError on the
// first lexical error.
std::vector<Token> tokenize(std::string_view source);

} // namespace gustl
