#pragma once

#include <cstddef>
#include <cstdint>

#include "finlat/cli/report.hpp"

namespace finlat::cli {

  // The property suite behind `finlat check`: one child per suite with case
  // and failure counts and the first failing case. Deterministic in `seed`;
  // `max_size` bounds the corpus posets.
  Report run_check (std::uint64_t seed, std::size_t max_size);

}
