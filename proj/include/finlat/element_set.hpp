#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace finlat {

  // Subset of a finite carrier {0, ..., n-1}. Comparison with < orders sets by
  // their value as a binary number (bit i has weight 2^i), which is the
  // canonical enumeration order used throughout the library.
  using ElementSet = boost::dynamic_bitset<std::uint64_t>;

  inline ElementSet make_set (std::size_t n, std::initializer_list<std::size_t> members) {
    ElementSet s (n);
    for (auto m : members)
      s.set (m);
    return s;
  }

  inline ElementSet full_set (std::size_t n) {
    ElementSet s (n);
    s.set ();
    return s;
  }

  template <typename F>
  void for_each_member (const ElementSet& s, F&& f) {
    for (auto i = s.find_first (); i != ElementSet::npos; i = s.find_next (i))
      f (i);
  }

  inline std::vector<std::size_t> members (const ElementSet& s) {
    std::vector<std::size_t> out;
    out.reserve (s.count ());
    for_each_member (s, [&] (std::size_t i) { out.push_back (i); });
    return out;
  }

  inline std::string to_string (const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for_each_member (s, [&] (std::size_t i) {
      if (not first)
        out += ",";
      out += std::to_string (i);
      first = false;
    });
    return out + "}";
  }

}
