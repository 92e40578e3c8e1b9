#pragma once

#include <ostream>

#include "finlat/cli/report.hpp"

namespace finlat::cli {

  inline constexpr int exit_ok = 0;
  inline constexpr int exit_verdict = 1;
  inline constexpr int exit_input = 2;
  inline constexpr int exit_capacity = 3;

  // exit_ok when the report passes, exit_verdict otherwise.
  int exit_code (const Report& r);

  // Runs one command line. Reports go to `out`, diagnostics to `err`.
  int run (int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}
