#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsigma::cli {

enum Exit { Ok = 0, VerificationFailed = 1, BadInput = 2, TooLarge = 3 };

/// Runs one command line (without the program name).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace qsigma::cli
