#pragma once

// Argument dispatch for the turnkit command-line tool. Output is captured so
// that batch lines can run concurrently and still print in input order.

#include <string>
#include <vector>

namespace turnkit::cli {

/// Exit codes: 0 success, 1 internal or numerical failure, 2 invalid input or
/// usage error, 3 computed but undecided by the available criterion.
enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kUndecided = 3 };

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name.
Result dispatch(const std::vector<std::string>& args);

/// Runs each non-blank, non-comment line of `text` as its own argument list.
/// `inherited` is prepended to every line. Exit code: 2 if any line is invalid,
/// else 1 if any failed, else 3 if any is undecided, else 0.
Result run_batch(const std::string& text, const std::vector<std::string>& inherited, unsigned threads);

}  // namespace turnkit::cli
