#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfaffian/decompose.hpp"

namespace pfaffian::cli {

enum ExitCode : int {
    kYes = 0,
    kNo = 1,
    kParseError = 2,
    kVerificationFailed = 3,
    kLimitExceeded = 4,
};

// Runs the command line `args` (without the program name). Input files are
// read from disk, "-" meaning standard input `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

// Decomposition tree as JSON, vertices 1-based.
std::string tree_json(const DecompositionTree &tree, int indent = 2);

}  // namespace pfaffian::cli
