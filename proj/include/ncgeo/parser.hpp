#pragma once

#include <string_view>

#include "ncgeo/element.hpp"

namespace ncgeo {

// Expression grammar shared by the CLI and config files.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | factor)*      juxtaposition multiplies
//   factor := atom ['^' integer]
//   atom   := rational | decimal | 'i' | 'w' '(' rational ')' | generator | '(' expr ')'
//
// Generators: U1..Un (torus; U1' inverse), g1..gn (free group; g1' inverse),
// S1..Sn with S1* the adjoint ('*' must follow the generator immediately; a
// separated '*' multiplies). Decimal literals require float mode. Throws
// Error(ParseError) with a position, or Error(UnknownGenerator).
AlgebraElement parse_expression(std::string_view src, const PresentationPtr& pres);

}  // namespace ncgeo
