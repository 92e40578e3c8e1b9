#pragma once

#include <stdexcept>
#include <string>

namespace finlat {

  class error : public std::runtime_error {
    public:
      using std::runtime_error::runtime_error;
  };

  // Malformed input: bad indices, broken tables, parse failures.
  class input_error : public error {
    public:
      using error::error;
  };

  // A construction would exceed a configured size bound.
  class capacity_error : public error {
    public:
      using error::error;
  };

  // The input is well formed but outside the operation's domain
  // (trivial lattice, non-Boolean algebra, ...).
  class domain_error : public error {
    public:
      using error::error;
  };

  class precondition_error : public error {
    public:
      using error::error;
  };

  // A quotient or congruence is not compatible with the relation it acts on.
  class well_definedness_error : public error {
    public:
      using error::error;
  };

}
