#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/poset.hpp"

namespace finlat {

  inline constexpr unsigned max_free_generators = 5;
  inline constexpr unsigned max_oracle_generators = 4;

  // Generator subset as a bit mask (bit i = generator x_i).
  using GeneratorMask = std::uint32_t;

  // Element of the free bounded distributive lattice on n generators in
  // join-of-meets normal form: the term is the join over `meets` of the meet
  // of each mask. `meets` is a sorted antichain; 0 is the empty list and 1 is
  // the list holding the empty mask.
  class AntichainTerm {
    public:
      // Drops every mask that contains another one. input_error when n is out
      // of range or a mask mentions a generator >= n.
      static AntichainTerm normalize (unsigned n, std::vector<GeneratorMask> raw);

      static AntichainTerm zero (unsigned n) { return normalize (n, {}); }
      static AntichainTerm one (unsigned n) { return normalize (n, {0}); }
      static AntichainTerm generator (unsigned n, unsigned i) { return normalize (n, {1u << i}); }

      unsigned generators () const { return n_; }
      const std::vector<GeneratorMask>& meets () const { return meets_; }
      bool is_zero () const { return meets_.empty (); }
      bool is_one () const { return meets_.size () == 1 and meets_[0] == 0; }

      AntichainTerm join (const AntichainTerm& other) const;
      AntichainTerm meet (const AntichainTerm& other) const;
      // P <= Q iff every meet of P contains some meet of Q.
      bool leq (const AntichainTerm& other) const;

      // Value of the term as a monotone Boolean function: bit v is set iff the
      // term is true when exactly the generators in v are true.
      std::uint32_t truth_table () const;
      static AntichainTerm from_truth_table (unsigned n, std::uint32_t table);

      // e.g. "x0&x1 | x2", "0", "1".
      std::string to_string () const;

      bool operator== (const AntichainTerm&) const = default;

    private:
      AntichainTerm (unsigned n, std::vector<GeneratorMask> meets) : n_ (n), meets_ (std::move (meets)) {}

      unsigned n_ = 0;
      std::vector<GeneratorMask> meets_;
  };

  struct FreeLattice {
    unsigned generators = 0;
    DLattice lattice;
    std::vector<AntichainTerm> terms;         // terms[i] is element i
    std::vector<std::uint32_t> truth_tables;  // ascending; element order

    Index index_of (const AntichainTerm& t) const;
  };

  // All antichains of subsets of n generators, ordered by truth table value.
  // capacity_error for n > 5.
  FreeLattice generate_free (unsigned n);

  // Meet-of-joins normal form: the minimal transversals B of t.meets(), so
  // that t is the meet over B of the join of B. Yields {} for 1 and {0} (the
  // empty join) for 0. Verified by expanding back.
  std::vector<GeneratorMask> meet_irreducible_decomposition (const AntichainTerm& t);

  // Heyting implication through the join-irreducible / meet-irreducible
  // decompositions: S -> T is 1 when S and T share a generator and T
  // otherwise, and p -> q is the meet of all S_i -> T_j.
  AntichainTerm implication_lemma (const AntichainTerm& p, const AntichainTerm& q);

  // Residual by scanning the whole free lattice: the join of every r with
  // p ^ r <= q. capacity_error for n > 4.
  AntichainTerm implication_oracle (const AntichainTerm& p, const AntichainTerm& q);

  struct CubeIsomorphism {
    Poset dual;                      // prime filter poset of the free lattice
    Poset cube;                      // n-fold power of the two-element chain
    std::vector<GeneratorMask> generator_sets;  // dual point -> A with filter up(meet A)
    std::vector<std::size_t> map;    // dual point -> cube index
    bool iso = false;
  };

  // capacity_error for n > 4.
  CubeIsomorphism dual_is_cube (unsigned n);

}
