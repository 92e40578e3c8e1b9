#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "finlat/poset.hpp"

namespace finlat::omega {

  // The space X: two descending chains a_0 > a_1 > ... and b_0 > b_1 > ...
  // with limits a_omega and b_omega, b_n <= a_n, a_omega below every a_n,
  // b_omega below every point. X is the two-point compactification of the
  // discrete set of finite-index points.

  // Subset of one chain. With `tail` unset, `finite` lists the member
  // indices; with `tail` set it lists the excluded ones. Finite indices are
  // below 64.
  struct ChainPart {
    std::uint64_t finite = 0;
    bool tail = false;
    bool omega = false;

    bool contains (std::size_t n) const { return n < 64 ? ((finite >> n & 1u) != 0) != tail : tail; }
    bool infinite () const { return tail; }
    bool empty_finite () const { return not tail and finite == 0; }

    bool operator== (const ChainPart&) const = default;
  };

  struct TailSet {
    ChainPart a;
    ChainPart b;

    static TailSet empty () { return {}; }
    static TailSet full () { return {{0, true, true}, {0, true, true}}; }
    static TailSet point_a (std::size_t n);
    static TailSet point_b (std::size_t n);
    static TailSet a_omega () { return {{0, false, true}, {}}; }
    static TailSet b_omega () { return {{}, {0, false, true}}; }

    bool operator== (const TailSet&) const = default;
  };

  TailSet set_union (const TailSet& u, const TailSet& v);
  TailSet set_intersection (const TailSet& u, const TailSet& v);
  TailSet set_complement (const TailSet& u);
  TailSet set_difference (const TailSet& u, const TailSet& v);
  bool is_subset (const TailSet& u, const TailSet& v);

  struct Topology {
    bool open = false;
    bool closed = false;
    bool clopen = false;
  };

  // Only the limit points constrain: a set is open when each limit point it
  // holds comes with a tail, closed when each tail comes with its limit.
  Topology classify (const TailSet& u);

  // Subspace topology of a closed c: s is open in c iff s u (X \ c) is open.
  Topology classify_in (const TailSet& s, const TailSet& c);

  TailSet down_closure_sym (const TailSet& u);
  TailSet up_closure_sym (const TailSet& u);

  // "a_3", "b_omega", "{a_0,a_2,b_omega}", "{a_n : n not in {1}} u {a_omega}".
  std::string to_string (const TailSet& u);

  // Every clopen TailSet whose finite indices are below k: 2^k finite masks
  // per chain, each with tail = omega.
  std::size_t clopen_family_size (std::size_t k);
  TailSet clopen_family_member (std::size_t k, std::size_t i);

  struct ExampleReport {
    std::size_t bound = 0;
    // (i) down and up closures of every generated clopen are clopen
    std::size_t family_size = 0;
    std::size_t down_not_clopen = 0;
    std::size_t up_not_clopen = 0;
    bool esakia = false;
    // (ii) C = down(b_0) u {a_omega} is closed and not open
    TailSet c;
    Topology c_topology;
    bool c_closed_not_open = false;
    // (iii) {a_omega} is clopen in C, with W clopen in X and W n C = {a_omega}
    TailSet witness;
    bool a_omega_clopen_in_c = false;
    // (iv) down{a_omega} n C = {a_omega, b_omega} is not clopen in C: open
    // sets of C around b_omega contain some b_n; checked for every open
    // neighbourhood in the generated family
    TailSet down_a_omega;
    Topology down_a_omega_in_c;
    std::size_t neighbourhoods_checked = 0;
    std::size_t neighbourhoods_without_b = 0;
    bool down_not_clopen_in_c = false;

    bool all () const { return esakia and c_closed_not_open and a_omega_clopen_in_c and down_not_clopen_in_c; }
  };

  ExampleReport verify_example (std::size_t k = 10);

  // X_k: a_0..a_{k-1}, b_0..b_{k-1}, a_omega, b_omega as points
  // 0..k-1, k..2k-1, 2k, 2k+1 with the induced order.
  Poset truncation (std::size_t k);
  ElementSet truncate (const TailSet& u, std::size_t k);
  TailSet lift (const ElementSet& s, std::size_t k);

}
