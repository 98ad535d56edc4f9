#pragma once

#include <string>
#include <vector>

#include "common/error.hpp"
#include "io/report.hpp"

namespace brsieve {

// Runs one subcommand ("curve jac-order", "sieve hypex", ...) with options
// given as a JSON object whose keys are the long flag names with '-' turned
// into '_'. Throws brsieve::Error on bad input or an exceeded budget.
Report run_command(const std::string& subcommand, const Json& config);

// Names accepted by run_command, in help order.
const std::vector<std::string>& command_names();

// Process exit code for a thrown error: 2 input, 3 budget, 1 otherwise.
int exit_code_for(const Error& e);

}  // namespace brsieve
