#pragma once

#include <map>
#include <string>

#include "exalg/gca.hpp"
#include "exalg/poly.hpp"

namespace exalg {

// named rational constants usable as identifiers in expressions
using Params = std::map<std::string, Rat>;

// "(-)? nat (/ nat)?" on its own, for parameter values
Rat parse_rational(const std::string& src);

// Recursive descent over the grammar
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := rational | ident | "(" expr ")"
// extended with a leading unary minus so every printed element parses back.
// Identifiers resolve to generators first, then to parameters. Errors carry
// the offending position.
Poly parse_poly(const std::string& src, const RingPtr& ring,
                const Params& params = {});

// Same grammar into the free graded-commutative algebra. Raising an odd
// generator to a power above 1 is rejected rather than silently zero.
GcaElement parse_gca(const std::string& src, const SigPtr& sig,
                     const Params& params = {});

}  // namespace exalg
