#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace collatz::cli {

/// Runs one CLI command. args excludes the program name. Returns the
/// process exit code: 0 success, 1 a verification failure was found
/// (budget exhausted, lemma violated, nonempty sweep failures), 2 usage
/// or domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace collatz::cli
