#ifndef WEAKGEN_CLI_HPP_
#define WEAKGEN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace weakgen {

  enum ExitCode : int {
    kExitOk         = 0,
    kExitSyntax     = 2,
    kExitValidation = 3,
    kExitResource   = 4,
    kExitSelftest   = 5,
  };

  //! Runs one command line; args excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace weakgen

#endif  // WEAKGEN_CLI_HPP_
