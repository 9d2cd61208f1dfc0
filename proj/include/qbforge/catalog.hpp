#pragma once

#include <string>
#include <vector>

#include "qbforge/algebra.hpp"

namespace qbforge {

/// Builds a named stock algebra.  Supported names:
///   chain:2          two element chain
///   godel:n          n-chain with product min
///   lukasiewicz:n    n-chain with truncated addition
///   heyting-d5       diamond 0 < a,b < c < 1 with the Heyting residual
///   prod(e1,e2)      componentwise product of two entries
/// Spaces in the name are ignored.  Every entry is verified to be a
/// residuated pseudo-hoop at construction.  Throws unknown_name.
FiniteAlgebra catalog(const std::string& name);

/// The name patterns accepted by catalog(), for help output.
std::vector<std::string> catalog_names();

}  // namespace qbforge
