#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/duality.hpp"
#include "finlat/element_set.hpp"
#include "finlat/poset.hpp"

namespace finlat {

  // World subsets of a RelSpace, bit x = world x.
  using WorldSet = std::uint64_t;

  inline constexpr std::size_t max_worlds = 64;

  inline WorldSet all_worlds (std::size_t n) {
    return n >= 64 ? ~WorldSet {0} : (WorldSet {1} << n) - 1;
  }

  // A finite set of worlds with an arbitrary binary relation.
  class RelSpace {
    public:
      RelSpace () = default;
      // rows[x] = R[x]. capacity_error beyond 64 worlds, input_error when a
      // row mentions a world out of range.
      explicit RelSpace (std::vector<WorldSet> rows);

      static RelSpace from_pairs (std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);
      static RelSpace identity (std::size_t n);
      static RelSpace empty (std::size_t n) { return RelSpace (std::vector<WorldSet> (n, 0)); }
      // Worlds 0..n-1 with x R y iff bit (x * n + y) of code is set.
      static RelSpace from_code (std::size_t n, std::uint64_t code);

      std::size_t size () const { return rows_.size (); }
      bool rel (std::size_t x, std::size_t y) const { return rows_[x] >> y & 1u; }
      WorldSet successors (std::size_t x) const { return rows_[x]; }
      const std::vector<WorldSet>& rows () const { return rows_; }
      WorldSet worlds () const { return all_worlds (size ()); }

      // Image and box of a world set: R[U] and {x : R[x] subset of U}.
      WorldSet image (WorldSet u) const;
      WorldSet box (WorldSet u) const;

      bool operator== (const RelSpace&) const = default;

    private:
      std::vector<WorldSet> rows_;
  };

  RelSpace compose (const RelSpace& r, const RelSpace& s);   // x (R;S) z iff x R y S z
  RelSpace converse (const RelSpace& r);
  RelSpace relation_union (const RelSpace& r, const RelSpace& s);
  bool contained_in (const RelSpace& r, const RelSpace& s);
  // R^0 = identity, R^{n+1} = R o R^n.
  RelSpace relation_power (const RelSpace& r, std::size_t n);
  // Reflexive-transitive closure R*.
  RelSpace star_closure (const RelSpace& r);
  // R_C = R n (C x C) with the members of c renumbered 0..|c|-1 in order.
  RelSpace restriction (const RelSpace& r, WorldSet c);

  bool is_reflexive (const RelSpace& r);
  bool is_transitive (const RelSpace& r);

  // Boolean algebra with a box preserving finite meets.
  class ModalAlgebra {
    public:
      // input_error when base is not Boolean or box fails box(1) = 1 or
      // box(a ^ b) = box(a) ^ box(b); the message names the instance.
      ModalAlgebra (DLattice base, std::vector<Index> box);

      const DLattice& base () const { return base_; }
      std::size_t size () const { return base_.size (); }
      Index box (std::size_t a) const { return box_[a]; }
      Index neg (std::size_t a) const { return neg_[a]; }
      Index diamond (std::size_t a) const { return neg_[box_[neg_[a]]]; }
      const std::vector<Index>& box_table () const { return box_; }

    private:
      DLattice base_;
      std::vector<Index> box_;
      std::vector<Index> neg_;
  };

  // Both directions of box-preserves-meets and diamond-preserves-joins; they
  // hold or fail together.
  bool box_preserves_meets (const ModalAlgebra& m);
  bool diamond_preserves_joins (const ModalAlgebra& m);

  // Powerset of the worlds (element index = world mask) with box_R. Needs
  // 2^size within max_lattice.
  ModalAlgebra algebra_from_space (const RelSpace& s, std::size_t max_lattice = default_max_lattice);

  struct JonssonTarski {
    RelSpace space;                      // worlds are ultrafilters
    std::vector<ElementSet> ultrafilters;  // ascending
    std::vector<Index> atoms;            // world -> generating atom
    bool diamond_form_agrees = false;    // x R y iff atom_x <= diamond(atom_y)
    std::vector<WorldSet> representation;  // element -> worlds containing it
    bool iso = false;                    // representation: m -> algebra_from_space(space)
  };

  // Ultrafilter space with x R y iff box(a) in x implies a in y.
  // domain_error when the base is trivial (no ultrafilters).
  JonssonTarski space_from_algebra (const ModalAlgebra& m);

  // space_from_algebra(algebra_from_space(s)) against s: world x goes to the
  // ultrafilter of sets containing x.
  struct SpaceRoundTrip {
    std::vector<std::size_t> map;
    bool iso = false;
  };
  SpaceRoundTrip round_trip_space (const RelSpace& s);

  struct ClassVerdict {
    bool k4 = false;
    bool s4 = false;
    std::vector<bool> n_transitive;   // index n = 0..max_n
    unsigned least_transitivity = 0;  // least n that is n-transitive
  };

  // Algebra side: box a <= box box a, box a <= a, and
  // box^{<=n} a <= box^{n+1} a with box^{<=n} a the meet of box^k a, k <= n.
  ClassVerdict class_checks (const ModalAlgebra& m, unsigned max_n = 4);
  // Space side: R transitive, R a quasi-order, R^{n+1} within the union of R^k, k <= n.
  ClassVerdict class_checks (const RelSpace& s, unsigned max_n = 4);

  enum class ClaimMode { strict, lenient };

  struct ReflexivizedAlgebra {
    ModalAlgebra algebra;     // box+ a = a ^ box a
    bool input_k4 = false;
    bool s4_verified = false; // only checked for K4 input
  };

  struct ReflexivizedSpace {
    RelSpace space;           // R u identity
    bool input_k4 = false;
    bool qmax_preserved = false;  // qmax(X, R) = qmax(X, R+), K4 input only
  };

  // strict: precondition_error on non-K4 input. lenient: computes anyway,
  // input_k4 = false and the claims are not checked.
  ReflexivizedAlgebra reflexivize (const ModalAlgebra& m, ClaimMode mode = ClaimMode::strict);
  ReflexivizedSpace reflexivize (const RelSpace& s, ClaimMode mode = ClaimMode::strict);

  // {x in c : for y in c, x R y implies y R x}. Arbitrary relations are
  // allowed; the result may then be empty.
  WorldSet qmax (const RelSpace& s, WorldSet c);
  // qmax of c under the reflexive-transitive closure of R_C. Nonempty for
  // nonempty c.
  WorldSet eqmax (const RelSpace& s, WorldSet c);

  // The weakly transitive maximality step on one subset c: when (R_C)* is a
  // single power (R_C)^n, eqmax(c) must equal qmax of c under (R_C)^n.
  struct WtmaxCheck {
    bool applicable = false;     // some n with (R_C)^n = (R_C)*
    std::size_t power = 0;       // least such n
    WorldSet eqmax = 0;
    WorldSet qmax_power = 0;     // in the worlds of the ambient space
    bool agrees = true;
  };
  WtmaxCheck wtmax_check (const RelSpace& s, WorldSet c);

  struct Relativization {
    ModalAlgebra algebra;          // elements below a, box_a c = a ^ box(not a v c)
    std::vector<Index> elements;   // new index -> element of m
    bool k4_inherited = true;      // false only if m is K4 and the result is not
  };

  // domain_error when a is bottom.
  Relativization relativize (const ModalAlgebra& m, Index a);

  // relativize(algebra_from_space(s), C) against algebra_from_space of the
  // restriction (C, R_C), through the renumbering of C.
  struct RelativizationDualCheck {
    Relativization relativized;
    ModalAlgebra restricted;
    std::vector<Index> map;   // relativized index -> restricted index
    bool iso = false;
  };
  // domain_error when c is empty.
  RelativizationDualCheck relativize_dual_check (const RelSpace& s, WorldSet c);

  struct FamaxResult {
    QuotientLattice quotient;       // B/F
    ElementSet quotient_ultrafilter;  // quasi-maximal point of (B/F, identity box)
    ElementSet pullback;            // p^{-1}[F']
    bool is_ultrafilter = false;
    bool extends_filter = false;
  };

  // domain_error when b is not Boolean; precondition_error when f is not a
  // proper filter.
  FamaxResult famax_quotient (const DLattice& b, const ElementSet& f);

  struct ClusterQuotient {
    Poset poset;                     // rho(X): [x] <= [y] iff x R y
    std::vector<std::size_t> class_of;
    std::vector<Index> fixpoints;    // box U = U, as world masks, ascending
    bool fixpoints_heyting = false;  // residuation holds in the fixpoint lattice
    bool upset_iso = false;          // fixpoints = upsets of rho(X) via U -> [U]
    bool qmax_matches_max = false;   // x quasi-maximal iff [x] maximal
  };

  // precondition_error when R is not a quasi-order.
  ClusterQuotient cluster_quotient (const RelSpace& s);

  // The lattice of box fixpoints of algebra_from_space(s), indexed like
  // ClusterQuotient::fixpoints.
  DLattice fixpoint_lattice (const RelSpace& s, std::span<const Index> fixpoints);

}
