#pragma once

#include <string>

#include "gustl/ast.hpp"
#include "gustl/lexer.hpp"

namespace gustl {

// Recursive-descent parser. Accepts exactly the language grammar and
// reports the first error (no recovery). Throws CompileError.
Program parse(const std::vector<Token>& tokens);

// Renders a tree back to canonical source text; reparsing the result
// yields an isomorphic tree.
std::string unparse(const Program& program);

// Indented structural dump for --dump-ast. Not a compatibility surface.
std::string dump_tree(const Program& program);

} // namespace gustl
