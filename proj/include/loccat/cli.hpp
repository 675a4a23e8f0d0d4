#pragma once

// The loccat command line: validate, localise, homset, check and
// verify-approximation, with JSON or text reports on `out`.

#include <iosfwd>
#include <string>
#include <vector>

namespace loccat {

  enum ExitCode : int {
    kExitOk           = 0,
    kExitFalse        = 1,
    kExitPrecondition = 2,
    kExitParse        = 3,
    kExitUndecided    = 4,
  };

  inline constexpr char const* kReportSchema = "loccat-report/1";

  // `args` excludes the program name. The limits profile is read from
  // LOCCAT_LIMITS_PROFILE unless `profile` is given.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err,
              char const*                     profile = nullptr);

}  // namespace loccat
