#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsc/lang/token.hpp"

namespace fsc::lang {

/// Splits `.fsc` text into tokens. `//` starts a comment running to the end of the line.
/// The returned sequence always ends with a single `Tok::End` token.
/// Throws LexError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source, const std::string& file = {});

}  // namespace fsc::lang
