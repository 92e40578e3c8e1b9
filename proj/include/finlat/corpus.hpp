#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/modal.hpp"
#include "finlat/poset.hpp"

// Seeded instance families shared by the tests, the acceptance run and the
// `check` command. Equal seeds give equal corpora.
namespace finlat::corpus {

  using Rng = std::mt19937_64;

  inline constexpr std::uint64_t default_seed = 20240607;

  // Random order on n points: each pair i < j of a random labelling is an
  // edge with probability `density`, then transitively closed.
  Poset random_poset (Rng& rng, std::size_t n, double density);

  // Chains and antichains of 0..max_size points, then `random_count` random
  // posets with 1..max_size points.
  std::vector<Poset> posets (std::uint64_t seed, std::size_t random_count = 200, std::size_t max_size = 6);

  // Distinct nontrivial distributive lattices with at most max_elements elements, as
  // upset lattices of small posets and again under a random relabelling.
  std::vector<DLattice> lattices (std::uint64_t seed, std::size_t max_elements = 6);

  // Powersets of 0..max_atoms points, canonical and relabelled.
  std::vector<DLattice> booleans (std::uint64_t seed, std::size_t max_atoms = 4);

  // Element i of the result is element perm[i] of d.
  DLattice relabel (const DLattice& d, std::span<const std::size_t> perm);
  ModalAlgebra relabel (const ModalAlgebra& m, std::span<const std::size_t> perm);
  std::vector<std::size_t> random_permutation (Rng& rng, std::size_t n);

  // Identity, empty, cycles, strict and reflexive chains on 1..max_worlds
  // worlds, then random relations.
  std::vector<RelSpace> relations (std::uint64_t seed, std::size_t random_count = 200, std::size_t max_worlds = 5);

  // Every transitive relation on up to 3 worlds, then transitive closures of
  // random relations on 4..max_worlds worlds.
  std::vector<RelSpace> transitive_relations (std::uint64_t seed, std::size_t random_count = 200,
                                              std::size_t max_worlds = 5);

  // Powerset algebras of random relations, presented under a random
  // relabelling of their elements.
  std::vector<ModalAlgebra> modal_algebras (std::uint64_t seed, std::size_t count = 100, std::size_t max_worlds = 4);

  // Non-distributive five-element lattices.
  DLattice pentagon ();
  DLattice diamond ();

}
