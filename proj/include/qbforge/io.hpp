#pragma once

#include <string>
#include <vector>

#include "qbforge/algebra.hpp"

namespace qbforge {

// The interchange form is a line oriented block:
//
//   algebra godel:3
//   elements 0 a 1
//   leq
//     1 1 1
//     0 1 1
//     0 0 1
//   to
//     1 1 1
//     a 1 1
//     0 a 1
//   lto
//     ...
//   mul          (optional)
//     ...
//   unit 1       (optional)
//   bottom 0     (optional)
//   class pseudo_hoop   (optional, ingest recheck)
//   end
//
// `#` starts a comment.  On input `leq` also accepts the form
// `leq pairs` followed by two-label lines, closed reflexively and
// transitively, so Hasse diagrams paste straight in.  Output always
// carries the full matrices in the field order above, byte for byte
// stable, which is what the round-trip tests pin down.

/// Renders one block.  The name and the labels must be single
/// whitespace-free tokens that do not collide with format keywords.
std::string serialize_algebra(const FiniteAlgebra& a);

/// Parses exactly one block and validates it through create().  A
/// `class` line additionally requires membership in that search class.
/// Throws parse on malformed input.
FiniteAlgebra ingest_algebra(const std::string& text);

/// Parses every block in the text, in order.  Empty input is an error.
std::vector<FiniteAlgebra> ingest_algebras(const std::string& text);

}  // namespace qbforge
