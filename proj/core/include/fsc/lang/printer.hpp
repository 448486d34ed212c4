#pragma once

#include <string>

#include "fsc/lang/ast.hpp"

namespace fsc::lang {

/// Prints an expression in listing style: `not(x)`, operands of a different
/// operator parenthesized, left-associated chains flat. Reparses to the same tree.
std::string to_string(const AstExpr& e);
std::string to_string(const AstExprPtr& e);

std::string to_string(const TypeRef& t);

std::string print(const Declaration& decl);
std::string print(const SourceSpec& spec);

}  // namespace fsc::lang
