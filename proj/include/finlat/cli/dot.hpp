#pragma once

#include <string>
#include <vector>

#include "finlat/cli/structure_file.hpp"

namespace finlat::cli {

  // Hasse diagram (covering pairs, drawn upwards) of a poset.
  std::string poset_dot (const Poset& p, const std::vector<std::string>& names);
  // Every pair of the relation, loops included.
  std::string relation_dot (const RelSpace& s, const std::vector<std::string>& names);
  // Posets and lattices as Hasse diagrams, relations as digraphs; algebras
  // draw their underlying lattice.
  std::string structure_dot (const Structure& s);

}
