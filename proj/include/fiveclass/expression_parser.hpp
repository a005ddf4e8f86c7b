#pragma once

// Text form of #_{S^1} expressions:
//   expr := term (('#' | '#~') term)*
//   term := 'X(' int ')' | 'X(' int ',' int ')' | 'S2xRP3' | '*S2xRP3'
//         | 'CP2xS1' | int '*(S2xS2)xS1'
// Whitespace is ignored. '#~' is framing bit 1.

#include <string_view>

#include "fiveclass/algebra.hpp"

namespace fiveclass {

/// Throws SyntaxError (offset into `text`, expected tokens) or an Error with
/// code SemanticError when the text parses but names no valid manifold in
/// `category`.
algebra::ManifoldExpression parse_expression(std::string_view text,
                                             bordism::Category category);

}  // namespace fiveclass
