#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gustl {

// 1-based source position, counted in code points (not bytes).
struct SourcePos {
    uint32_t line = 1;
    uint32_t column = 1;
};

// Diagnostic codes are a stable contract, see docs/diagnostics.md.
struct Diagnostic {
    std::string code;
    std::string message;
    SourcePos pos;
};

// Thrown by the lexer and parser on the first error; semantic analysis
// collects diagnostics instead of throwing.
class CompileError : public std::runtime_error {
public:
    explicit CompileError(Diagnostic diag)
        : std::runtime_error(diag.code + ": " + diag.message),
          diag_(std::move(diag)) {}

    const Diagnostic& diag() const { return diag_; }

private:
    Diagnostic diag_;
};

std::string format_diagnostic(const Diagnostic& d);

} // namespace gustl
