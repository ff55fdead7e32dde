#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmg {

  // Exit codes.
  inline constexpr int kExitOk        = 0;
  inline constexpr int kExitParse     = 2;
  inline constexpr int kExitDomain    = 3;
  inline constexpr int kExitInvariant = 4;

  // The command line front end; args exclude the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace lmg
