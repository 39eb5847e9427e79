#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaforms::cli {

enum ExitCode : int {
    ok = 0,
    usage = 2,
    verification_failed = 3,
    no_convergence = 4,
};

// args excludes the program name. Reports go to `out` (or the --output file),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetaforms::cli
