#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsc/lang/ast.hpp"
#include "fsc/lang/token.hpp"

namespace fsc::lang {

/// Parses a token sequence produced by `tokenize` into a specification.
/// Throws SyntaxError (with the set of expected tokens) on malformed input,
/// including trailing tokens that do not start a declaration.
SourceSpec parse(const std::vector<Token>& tokens);

/// tokenize + parse.
SourceSpec parse_source(std::string_view source, const std::string& file = {});

/// Parses a single expression, e.g. a guard given on the command line.
AstExprPtr parse_expression(std::string_view source);

}  // namespace fsc::lang
