#pragma once

#include <string_view>

#include "grim/poly.hpp"

namespace grim {

/// Parses the polynomial grammar
///
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-int)?
///   base   := rational | identifier | '(' expr ')'
///
/// Whitespace is insignificant and multiplication must be explicit. A single
/// leading sign is accepted so that forms such as "-y^2+y*z" can be written
/// the way they are printed.
///
/// Throws ParseError (Syntax or UnknownIdentifier) with the byte offset.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace grim
