#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "finlat/element_set.hpp"

namespace finlat {

  inline constexpr std::size_t default_max_elements = std::size_t {1} << 20;

  // Finite partial order on {0, ..., size-1}. A finite poset is also a finite
  // Priestley (and Esakia) space under the discrete topology, so every subset
  // is clopen and the order-topological operations reduce to the ones below.
  //
  // The order is kept as the full <= matrix, stored twice: up_[i] = {j : i <= j}
  // and down_[i] = {j : j <= i}.
  class Poset {
    public:
      // Validates reflexivity, antisymmetry and transitivity of `up_rows`;
      // throws input_error naming the first violated instance.
      explicit Poset (std::vector<ElementSet> up_rows);

      // Reflexive-transitive closure of `pairs` (i, j) meaning i <= j; throws
      // input_error if the closure is not antisymmetric.
      static Poset from_pairs (std::size_t n,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs);

      static Poset chain (std::size_t n);
      static Poset antichain (std::size_t n);

      std::size_t size () const { return up_.size (); }
      bool leq (std::size_t i, std::size_t j) const { return up_[i].test (j); }
      const ElementSet& up (std::size_t i) const { return up_[i]; }
      const ElementSet& down (std::size_t i) const { return down_[i]; }
      const std::vector<ElementSet>& up_rows () const { return up_; }

      ElementSet empty_set () const { return ElementSet (size ()); }
      ElementSet carrier () const { return full_set (size ()); }

      bool operator== (const Poset& other) const { return up_ == other.up_; }

    private:
      struct trusted_tag {};
      Poset (std::vector<ElementSet> up_rows, trusted_tag);
      void fill_down ();

      std::vector<ElementSet> up_;
      std::vector<ElementSet> down_;

      friend Poset order_dual (const Poset&);
      friend Poset product (const Poset&, const Poset&, std::size_t);
      friend Poset quotient (std::span<const ElementSet>, std::span<const std::size_t>);
  };

  // {x : exists y in s, y <= x}; throws input_error on a size mismatch.
  ElementSet up_closure (const Poset& p, const ElementSet& s);
  ElementSet down_closure (const Poset& p, const ElementSet& s);

  bool is_upset (const Poset& p, const ElementSet& s);
  bool is_downset (const Poset& p, const ElementSet& s);

  // Maximal (minimal) elements of c under the restricted order. Nonempty
  // whenever c is nonempty.
  ElementSet max_points (const Poset& p, const ElementSet& c);
  ElementSet min_points (const Poset& p, const ElementSet& c);

  Poset order_dual (const Poset& p);

  // Componentwise order on p x q. Element (a, b) has index a * q.size() + b.
  // Throws capacity_error when the product exceeds max_elements.
  Poset product (const Poset& p, const Poset& q,
                 std::size_t max_elements = default_max_elements);

  // n-fold power of the two-element chain; coordinate 0 is the most
  // significant bit of the index.
  Poset cube (std::size_t n, std::size_t max_elements = default_max_elements);

  // Quotient of a preorder (rows: rel[i] = {j : i R j}) by a partition given
  // as a class id per element (ids 0..k-1, every id used). Classes are
  // ordered by [x] <= [y] iff x R y. Throws well_definedness_error when the
  // partition is not the cluster partition of a preorder, i.e. when the
  // induced relation is not well defined or not antisymmetric.
  Poset quotient (std::span<const ElementSet> rel, std::span<const std::size_t> class_of);

  // Cluster partition of a preorder: x ~ y iff x R y and y R x. Class ids are
  // assigned in order of least member.
  std::vector<std::size_t> cluster_partition (std::span<const ElementSet> rel);

  // Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers (const Poset& p);

  // A linear extension: every i appears before every j with i < j.
  std::vector<std::size_t> linear_extension (const Poset& p);

  // Explicit order isomorphism p -> q, if one exists (backtracking search).
  std::optional<std::vector<std::size_t>> find_isomorphism (const Poset& p, const Poset& q);

  // True iff `map` is a bijection p -> q with i <= j <=> map[i] <= map[j].
  bool is_order_isomorphism (const Poset& p, const Poset& q, std::span<const std::size_t> map);

}
