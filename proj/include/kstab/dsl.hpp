#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kstab/fibered.hpp"
#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Expression language for multivector input.
//
//   document := assignment+
//   assignment := NAME "=" expression ";"
//   expression := ["+"|"-"] term (("+"|"-") term)*
//   term := factor ("*" factor)*
//   factor := RATIONAL | VAR | VAR "^" INT | "e[" INT ("," INT)* "]"
//           | "(" expression ")"
//
// "*" is the wedge product (ordinary multiplication on scalar factors),
// "e[i,...]" is the 1-based coordinate wedge basis: repeated indices give
// zero and out-of-order indices flip the sign. RATIONAL is an integer or
// p/q; decimal literals are rejected (exact input only). "#" starts a
// comment running to the end of the line.
//
// Variables: x1..xn, with aliases x,y,z accepted while the dimension is at
// most 3. On a fibered space the base variables are x1..xd and the fiber
// variables y1..yrf (no aliases). When no dimension is supplied it is
// inferred as the smallest one covering every variable and wedge index.
//
// Errors are reported as ParseError with 1-based line and column.
// =========================================================================

// Parses one expression. n = 0 infers the dimension.
MultiVector parse_mvf(const std::string& text, int n = 0);

// Parses one expression over a fibered space (variables x1..xd, y1..yrf).
MultiVector parse_mvf_fibered(const std::string& text, const FiberedSpace& fs);

struct NamedMultiVectors {
    int n = 0;
    std::vector<std::pair<std::string, MultiVector>> entries; // document order
};

// Parses an assignment document; every expression shares one dimension
// (given, or inferred across the whole document). Duplicate names are
// rejected.
NamedMultiVectors parse_document_dsl(const std::string& text, int n = 0);

} // namespace kstab
