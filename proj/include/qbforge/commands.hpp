#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbforge {

/// The whole command surface behind the qbforge binary, separated from
/// main() so tests can drive it through string streams.  Returns the
/// process exit code: 0 every asserted law holds, 1 some law has a
/// witness against it, 2 the input was unusable.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qbforge
