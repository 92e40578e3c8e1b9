#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/poset.hpp"

namespace finlat {

  // A finite distributive lattice with its Heyting implication and,
  // optionally, the co-implication of the order dual.
  //
  //   arrow(a, b)   = greatest c with a ^ c <= b
  //   coarrow(a, b) = least c with a <= b v c      ("a minus b")
  class HeytingAlgebra {
    public:
      const DLattice& base () const { return base_; }
      std::size_t size () const { return base_.size (); }

      Index arrow (std::size_t a, std::size_t b) const { return arrow_[a * size () + b]; }
      Index neg (std::size_t a) const { return arrow (a, base_.bottom ()); }

      bool has_coarrow () const { return coarrow_.has_value (); }
      Index coarrow (std::size_t a, std::size_t b) const { return (*coarrow_)[a * size () + b]; }

      const std::vector<Index>& arrow_table () const { return arrow_; }

    private:
      HeytingAlgebra (DLattice base, std::vector<Index> arrow,
                      std::optional<std::vector<Index>> coarrow)
        : base_ (std::move (base)), arrow_ (std::move (arrow)), coarrow_ (std::move (coarrow)) {}

      DLattice base_;
      std::vector<Index> arrow_;
      std::optional<std::vector<Index>> coarrow_;

      friend HeytingAlgebra compute_arrow (const DLattice&, bool);
  };

  // Brute-force residual table (join of all c with a ^ c <= b), checked
  // against residuation on every triple. With `with_coarrow` the order-dual
  // residual is materialized and checked the same way.
  HeytingAlgebra compute_arrow (const DLattice& d, bool with_coarrow = false);

  // First triple (a, b, c) violating a ^ c <= b <=> c <= arrow(a, b).
  std::optional<std::array<Index, 3>> residuation_violation (const HeytingAlgebra& h);
  // First triple violating coarrow(a, b) <= c <=> a <= b v c.
  std::optional<std::array<Index, 3>> coresiduation_violation (const HeytingAlgebra& h);

  // Upset-side formulas on a finite poset, for upsets u and v:
  //   implication   = X \ down(u \ v)
  //   coimplication = up(v \ u)
  // The coimplication here takes the subtracted set first, so it equals
  // coarrow(v, u) in the upset lattice.
  struct DualArrows {
    ElementSet implication;
    ElementSet coimplication;
  };

  // input_error when u or v is not an upset.
  DualArrows dual_arrow_formula (const Poset& p, const ElementSet& u, const ElementSet& v);

  // Number of upset pairs on which the formulas disagree with the tables of
  // compute_arrow(from_upsets(p)).
  std::size_t dual_arrow_mismatches (const Poset& p);

  struct FilterBijection {
    std::vector<FilterOrIdeal> heyting_filters;   // maximal filters of H
    std::vector<FilterOrIdeal> boolean_filters;   // maximal filters of B(H)
    std::vector<std::size_t> forward;    // F -> filter of B(H) generated by F n B(H)
    std::vector<std::size_t> backward;   // G -> {a : not not a in G}
    bool bijective = false;              // forward, backward mutually inverse
    // Whether G -> upward closure of G in H also inverts forward; this holds
    // for Boolean H and fails as soon as some maximal filter holds a
    // non-regular element (the 3-chain already).
    bool upward_closure_inverts = false;
  };

  struct Booleanization {
    DLattice boolean;            // the regular elements with a v' b = not not (a v b)
    std::vector<Index> inclusion;  // boolean index -> index in H
    bool is_boolean = false;
    FilterBijection filters;
  };

  // Regular elements {a : not not a = a} of h.
  Booleanization booleanization (const HeytingAlgebra& h);

}
