#pragma once

#include "weightcat/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weightcat {

// Result of one front-end command: JSON body, text rendering, and whether it matched expectations.
struct CommandResult {
    Json body;
    std::string text;
    bool pass = true;
};

// Raised for malformed user input; front ends map it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// theta indices are 1-based throughout this interface.
CommandResult run_classify(const std::string& type, const std::vector<int>& theta);
CommandResult run_verify(const std::string& module, const std::string& a, std::optional<std::vector<int>> theta,
                         int B, int D);
// module N or M: Ext^1 constraint system, passes when the solution space is zero.
// module sl2: cocycle quotient on A1, passes when it is 1 for a self pair and 0 otherwise.
CommandResult run_ext(const std::string& module, const std::string& a, const std::string& b, int B);
// id may be "all"; empty a draws parameters from the seed.
CommandResult run_lab(const std::string& id, const std::string& a, const std::string& c, const std::string& type,
                      const std::vector<int>& theta, int B, int D, unsigned seed);

}  // namespace weightcat
