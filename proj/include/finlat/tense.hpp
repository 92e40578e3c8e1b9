#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finlat/heyting.hpp"
#include "finlat/modal.hpp"

namespace finlat {

  // Boolean algebra with a future and a past box, each preserving finite
  // meets and tied together by a <= boxF(diaP a) and a <= boxP(diaF a).
  class TenseAlgebra {
    public:
      // input_error naming the element when either box is invalid or a
      // connecting axiom fails.
      TenseAlgebra (DLattice base, std::vector<Index> box_future, std::vector<Index> box_past);

      const ModalAlgebra& future () const { return future_; }
      const ModalAlgebra& past () const { return past_; }
      const DLattice& base () const { return future_.base (); }
      std::size_t size () const { return future_.size (); }

    private:
      ModalAlgebra future_;
      ModalAlgebra past_;
  };

  // Least element at which a connecting axiom fails for the pair of boxes
  // (which share a base).
  std::optional<Index> connecting_axiom_violation (const ModalAlgebra& future, const ModalAlgebra& past);

  // boxF = box_R and boxP = box of the converse relation.
  TenseAlgebra tense_from_space (const RelSpace& s, std::size_t max_lattice = default_max_lattice);

  // (base, boxF) is S4.
  bool is_s4t (const TenseAlgebra& t);

  struct BiHeyting {
    HeytingAlgebra algebra;       // with co-implication
    std::vector<Index> fixpoints; // algebra index -> element of t, ascending
  };

  // Fixpoints of boxF with brute-force arrow and co-arrow, both checked.
  // precondition_error unless is_s4t.
  BiHeyting biheyting_fixpoints (const TenseAlgebra& t);

  // For a quasi-order: the fixpoint algebra of tense_from_space(s) against
  // the upsets of the cluster quotient, including arrow(U, V) = X \ down(U \ V)
  // and coarrow(V, U) = up(V \ U).
  struct BiHeytingDualCheck {
    bool lattice_iso = false;
    std::size_t formula_mismatches = 0;
  };
  BiHeytingDualCheck biheyting_dual_check (const RelSpace& s);

  // Every meet-preserving box on the powerset of s's worlds that satisfies
  // both connecting axioms against box_R, as tables. Candidates are fixed by
  // their values on coatoms. capacity_error beyond 4 worlds.
  std::vector<std::vector<Index>> conjugate_candidates (const RelSpace& s);

}
