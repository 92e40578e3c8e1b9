#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/poset.hpp"

namespace finlat {

  // The Stone map sigma(a) = {prime filters containing a} together with the
  // verdict that it is a lattice isomorphism onto the upsets of the dual.
  struct DualityWitness {
    std::vector<ElementSet> forward;      // sigma(a), a set of dual points
    std::vector<ElementSet> backward;     // dual point -> its prime filter
    std::vector<Index> upset_index;       // a -> index of sigma(a) in from_upsets(dual)
    bool iso = false;
  };

  struct PriestleyDual {
    Poset space;  // prime filters ordered by inclusion, ascending bitset order
    DualityWitness witness;
  };

  // Prime filter poset of a nontrivial lattice. domain_error when trivial.
  PriestleyDual priestley_dual (const DLattice& d);

  struct PosetRoundTrip {
    std::vector<std::size_t> map;  // x -> dual point {upsets containing x}
    bool iso = false;
  };

  // p against the dual of its upset lattice via x -> {U : x in U}.
  PosetRoundTrip round_trip_poset (const Poset& p);

  // Lattice round trip: d against the upsets of its dual, with the explicit
  // index map a -> sigma(a).
  struct LatticeRoundTrip {
    std::vector<Index> map;
    bool iso = false;
  };
  LatticeRoundTrip round_trip_lattice (const DLattice& d);

  struct StoneDual {
    Poset space;  // antichain of ultrafilters
    std::vector<ElementSet> ultrafilters;
    std::size_t atoms = 0;
  };

  // domain_error naming a complement-free element when b is not Boolean.
  StoneDual stone_dual (const DLattice& b);

  // ---- Congruences and quotients --------------------------------------------

  // Class id per element; ids in order of least member.
  using Congruence = std::vector<std::size_t>;

  // Equivalence generated by the kernel pairs, checked for compatibility
  // with meet and join. well_definedness_error names the first violated
  // substitution instance.
  Congruence congruence_from_pairs (const DLattice& d,
                                    std::span<const std::pair<Index, Index>> kernel);

  // Congruence x ~ y iff x ^ g = y ^ g for some g in f (f a filter).
  Congruence congruence_of_filter (const DLattice& d, const ElementSet& f);

  struct QuotientLattice {
    DLattice lattice;
    std::vector<Index> projection;  // element -> class index
  };

  QuotientLattice quotient_lattice (const DLattice& d, const Congruence& c);

  struct SubspaceEmbedding {
    QuotientLattice quotient;
    Poset quotient_dual;
    PriestleyDual ambient_dual;
    std::vector<std::size_t> embedding;  // quotient dual point -> ambient dual point
    bool injective = false;
    bool order_embedding = false;
    bool image_is_saturated = false;  // image = prime filters that are unions of classes
  };

  // Dual of the surjection d -> d/kernel as an embedding of dual posets.
  SubspaceEmbedding surjection_to_subspace (const DLattice& d,
                                            std::span<const std::pair<Index, Index>> kernel);

  // Esakia (down-closure of clopens is clopen) and bi-Esakia (up-closure too)
  // conditions. Every subset of a finite discrete space is clopen, so these
  // hold for every finite poset; the non-trivial instance is the symbolic
  // omega space.
  constexpr bool is_esakia (const Poset&) { return true; }
  constexpr bool is_bi_esakia (const Poset&) { return true; }

}
