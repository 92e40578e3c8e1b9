#include "finlat/cli/dot.hpp"

#include "json.hpp"

namespace finlat::cli {

  namespace {
    std::string quoted (const std::string& s) { return nlohmann::json (s).dump (); }

    std::string nodes (const std::vector<std::string>& names) {
      std::string out;
      for (const auto& n : names)
        out += "  " + quoted (n) + ";\n";
      return out;
    }
  }

  std::string poset_dot (const Poset& p, const std::vector<std::string>& names) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n" + nodes (names);
    for (auto [i, j] : covers (p))
      out += "  " + quoted (names[i]) + " -> " + quoted (names[j]) + " [arrowhead=none];\n";
    return out + "}\n";
  }

  std::string relation_dot (const RelSpace& s, const std::vector<std::string>& names) {
    std::string out = "digraph relation {\n  node [shape=circle];\n" + nodes (names);
    for (std::size_t x = 0; x < s.size (); ++x)
      for (std::size_t y = 0; y < s.size (); ++y)
        if (s.rel (x, y))
          out += "  " + quoted (names[x]) + " -> " + quoted (names[y]) + ";\n";
    return out + "}\n";
  }

  std::string structure_dot (const Structure& s) {
    switch (s.kind) {
      case Kind::poset: return poset_dot (*s.poset, s.elements);
      case Kind::dlattice: return poset_dot (order_of (*s.lattice), s.elements);
      case Kind::relspace: return relation_dot (*s.space, s.elements);
      case Kind::modal_algebra: return poset_dot (order_of (s.modal->base ()), s.elements);
      case Kind::tense_algebra: return poset_dot (order_of (s.tense->base ()), s.elements);
    }
    return {};
  }

}
