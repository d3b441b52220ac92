#ifndef TWOPOINT_CLI_HPP
#define TWOPOINT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "twopoint/budget.hpp"
#include "twopoint/verifiers.hpp"

namespace twopoint
{

enum ExitCode
{
  exit_pass = 0,
  exit_claim_failed = 1,
  exit_error = 2,
};

// Every check of the acceptance suite, in a fixed order, each with a fresh
// budget of `budget_limit` operations.
std::vector<VerificationReport> verify_all(RunOptions const &options,
                                           std::uint64_t budget_limit);

// args excludes the program name.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace twopoint

#endif // TWOPOINT_CLI_HPP
