#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boxram {

/// Domain error raised on precondition or schema violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search gave up before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Accumulated validation problems; empty means valid.
struct Diagnostics {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

}  // namespace boxram
