#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itcraft::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;      // success, or "IT found" for `check it`
inline constexpr int kNo = 1;      // a negative answer: no IT, check failed, certificate rejected
inline constexpr int kInvalid = 2; // bad arguments or input files
inline constexpr int kBudget = 3;  // a search ran out of budget

/// `args` excludes the program name. Errors go to `err` as a JSON object
/// {"error": code, "message": text[, "step": i]}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace itcraft::cli
