#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finlat/element_set.hpp"
#include "finlat/poset.hpp"

namespace finlat {

  // Lattice element index.
  using Index = std::uint16_t;

  // Bound on lattice size; meet/join tables are size^2 entries each.
  inline constexpr std::size_t default_max_lattice = 8192;

  // Finite bounded distributive lattice given by meet and join tables
  // (row-major, size x size). The order is derived: a <= b iff a ^ b = a.
  class DLattice {
    public:
      // Checks totality, the lattice laws, boundedness and distributivity
      // exhaustively; throws input_error naming the first violated instance.
      static DLattice from_tables (std::size_t n, std::vector<Index> meet, std::vector<Index> join);

      // For constructions whose tables are correct by construction. Only
      // shape, commutativity and boundedness are checked.
      static DLattice from_tables_unchecked (std::size_t n, std::vector<Index> meet,
                                             std::vector<Index> join);

      // Boolean lattice of subsets of {0..k-1}; element index = bit mask.
      static DLattice powerset (std::size_t k, std::size_t max_lattice = default_max_lattice);
      static DLattice chain (std::size_t n);

      std::size_t size () const { return n_; }
      Index meet (std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
      Index join (std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
      Index bottom () const { return bottom_; }
      Index top () const { return top_; }
      bool leq (std::size_t a, std::size_t b) const { return meet (a, b) == a; }
      bool trivial () const { return bottom_ == top_; }

      const ElementSet& up (std::size_t a) const { return up_[a]; }
      const ElementSet& down (std::size_t a) const { return down_[a]; }

      const std::vector<Index>& meet_table () const { return meet_; }
      const std::vector<Index>& join_table () const { return join_; }

      ElementSet empty_set () const { return ElementSet (n_); }

      bool operator== (const DLattice& other) const {
        return n_ == other.n_ and meet_ == other.meet_ and join_ == other.join_;
      }

    private:
      DLattice (std::size_t n, std::vector<Index> meet, std::vector<Index> join);

      std::size_t n_ = 0;
      std::vector<Index> meet_, join_;
      Index bottom_ = 0, top_ = 0;
      std::vector<ElementSet> up_, down_;
  };

  // Lattice-law or distributivity violation of raw tables, as a message.
  std::optional<std::string> lattice_violation (std::size_t n, std::span<const Index> meet,
                                                std::span<const Index> join);

  // Same lattice with the order reversed (meet and join swapped).
  DLattice order_dual (const DLattice& d);

  // The derived order as a Poset.
  Poset order_of (const DLattice& d);

  // Complement of a, if it has one.
  std::optional<Index> complement (const DLattice& d, Index a);

  // Least element without a complement, or nullopt if d is Boolean.
  std::optional<Index> complement_free_element (const DLattice& d);
  inline bool is_boolean (const DLattice& d) { return not complement_free_element (d); }

  // Injective map preserving meet, join, bottom and top.
  bool is_lattice_embedding (const DLattice& from, const DLattice& to, std::span<const Index> map);
  std::optional<std::vector<Index>> find_lattice_isomorphism (const DLattice& a, const DLattice& b);

  // Sublattice on the listed elements (which must contain bottom and top
  // and be closed under meet and join); elements are renumbered in the
  // order given. Throws input_error when not closed.
  DLattice sublattice (const DLattice& d, std::span<const Index> elements);

  // ---- Upset lattices -------------------------------------------------------

  struct UpsetLattice {
    DLattice lattice;
    // upsets[i] is the upset represented by lattice element i, in ascending
    // bitset order; element 0 is the empty upset, the last one the carrier.
    std::vector<ElementSet> upsets;

    std::optional<Index> index_of (const ElementSet& upset) const;
  };

  // All upsets of p under intersection and union.
  UpsetLattice from_upsets (const Poset& p, std::size_t max_lattice = default_max_lattice);

  // All upsets of p in ascending bitset order.
  std::vector<ElementSet> enumerate_upsets (const Poset& p, std::size_t max_count);

  // ---- Filters and ideals ---------------------------------------------------

  enum class SetKind { filter, ideal };

  struct FilterOrIdeal {
    SetKind kind;
    ElementSet members;

    bool operator== (const FilterOrIdeal&) const = default;
  };

  bool is_filter (const DLattice& d, const ElementSet& s);
  bool is_ideal (const DLattice& d, const ElementSet& s);
  bool is_proper (const DLattice& d, const FilterOrIdeal& s);
  bool is_prime (const DLattice& d, const FilterOrIdeal& s);

  // Least ideal (filter) containing s; the ideal generated by the empty set
  // is {bottom} under the nonempty convention.
  ElementSet ideal_generated (const DLattice& d, const ElementSet& s);
  ElementSet filter_generated (const DLattice& d, const ElementSet& s);

  // All (nonempty) ideals / filters, by exhaustive generation from {bottom}
  // ({top}), in ascending bitset order.
  std::vector<FilterOrIdeal> enumerate_ideals (const DLattice& d);
  std::vector<FilterOrIdeal> enumerate_filters (const DLattice& d);

  struct PrimeFilter {
    FilterOrIdeal filter;
    FilterOrIdeal complement;  // the matching prime ideal D \ F
  };

  // Prime filters in ascending bitset order; domain_error on a trivial lattice.
  std::vector<PrimeFilter> enumerate_prime_filters (const DLattice& d);
  std::vector<FilterOrIdeal> enumerate_prime_ideals (const DLattice& d);

  // Inclusion-maximal proper ideals (filters); each one is re-verified by
  // checking that adjoining any outside element generates an improper ideal.
  std::vector<FilterOrIdeal> maximal_ideals (const DLattice& d);
  std::vector<FilterOrIdeal> maximal_filters (const DLattice& d);

  // Least prime ideal P (ascending bitset order) with i <= P and P disjoint
  // from f. precondition_error if f and i meet or are of the wrong kind.
  FilterOrIdeal pit_witness (const DLattice& d, const FilterOrIdeal& f, const FilterOrIdeal& i);

  // ---- Ideal lattice and the maximal-ideal pullback ----------------------

  struct IdealLattice {
    DLattice lattice;
    std::vector<ElementSet> ideals;   // ideals[k] is element k of `lattice`
    std::vector<Index> embedding;     // a -> index of the principal ideal of a
    bool embedding_verified = false;  // embedding is a lattice embedding
  };

  IdealLattice ideal_lattice (const DLattice& d, std::size_t max_lattice = default_max_lattice);

  // One step of the maximality argument: an ideal N strictly above the
  // pullback, an element a of N outside it, and b in some I of M with
  // a v b = top.
  struct ClmaxProbe {
    ElementSet larger_ideal;
    Index a;
    Index witness_ideal;  // index in the ideal lattice
    Index b;
  };

  struct ClmaxTriple {
    ElementSet maximal_ideal;  // maximal ideal M of Id(D), over Id(D) indices
    ElementSet pullback;       // preimage of M along the principal-ideal map
    bool pullback_maximal = false;
    std::vector<ClmaxProbe> probes;
    bool probes_ok = false;
  };

  struct ClmaxReport {
    IdealLattice ideals;
    std::vector<ClmaxTriple> triples;
    bool verdict = false;
  };

  ClmaxReport clmax_pullback (const DLattice& d);

  // ---- Boolean envelope -----------------------------------------------------

  struct BooleanEnvelope {
    DLattice envelope;             // powerset of the prime filters of d
    std::vector<Index> embedding;  // a -> mask of prime filters containing a
    bool embedding_verified = false;
    bool prime_ideals_restrict = false;  // every prime ideal pulls back to one of d
  };

  BooleanEnvelope boolean_envelope (const DLattice& d, std::size_t max_lattice = default_max_lattice);

}
