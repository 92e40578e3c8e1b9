#include "finlat/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "finlat/errors.hpp"

namespace finlat::corpus {

  namespace {
    void add_unique (std::vector<DLattice>& out, DLattice d) {
      if (std::find (out.begin (), out.end (), d) == out.end ())
        out.push_back (std::move (d));
    }

    DLattice five_element (const std::vector<std::pair<std::size_t, std::size_t>>& order) {
      // 0 = bottom, 4 = top; the pairs give the remaining strict order.
      std::vector<std::pair<std::size_t, std::size_t>> pairs = order;
      for (std::size_t x = 1; x < 4; ++x) {
        pairs.emplace_back (0, x);
        pairs.emplace_back (x, 4);
      }
      pairs.emplace_back (0, 4);
      const auto p = Poset::from_pairs (5, pairs);
      std::vector<Index> meet (25), join (25);
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
          // Greatest common lower bound and least common upper bound.
          const auto lower = p.down (a) & p.down (b);
          const auto upper = p.up (a) & p.up (b);
          for_each_member (lower, [&] (std::size_t c) {
            if (lower.is_subset_of (p.down (c)))
              meet[a * 5 + b] = static_cast<Index> (c);
          });
          for_each_member (upper, [&] (std::size_t c) {
            if (upper.is_subset_of (p.up (c)))
              join[a * 5 + b] = static_cast<Index> (c);
          });
        }
      return DLattice::from_tables_unchecked (5, std::move (meet), std::move (join));
    }
  }

  Poset random_poset (Rng& rng, std::size_t n, double density) {
    const auto label = random_permutation (rng, n);
    std::bernoulli_distribution edge (density);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge (rng))
          pairs.emplace_back (label[i], label[j]);
    return Poset::from_pairs (n, pairs);
  }

  std::vector<Poset> posets (std::uint64_t seed, std::size_t random_count, std::size_t max_size) {
    Rng rng (seed);
    std::vector<Poset> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
      out.push_back (Poset::chain (n));
      out.push_back (Poset::antichain (n));
    }
    std::uniform_int_distribution<std::size_t> size (1, std::max<std::size_t> (max_size, 1));
    std::uniform_real_distribution<double> density (0.1, 0.7);
    for (std::size_t i = 0; i < random_count; ++i) {
      const auto n = size (rng);
      out.push_back (random_poset (rng, n, density (rng)));
    }
    return out;
  }

  std::vector<std::size_t> random_permutation (Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm (n);
    std::iota (perm.begin (), perm.end (), 0);
    std::shuffle (perm.begin (), perm.end (), rng);
    return perm;
  }

  DLattice relabel (const DLattice& d, std::span<const std::size_t> perm) {
    const auto n = d.size ();
    std::vector<std::size_t> inverse (n);
    for (std::size_t i = 0; i < n; ++i)
      inverse[perm[i]] = i;
    std::vector<Index> meet (n * n), join (n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        meet[i * n + j] = static_cast<Index> (inverse[d.meet (perm[i], perm[j])]);
        join[i * n + j] = static_cast<Index> (inverse[d.join (perm[i], perm[j])]);
      }
    return DLattice::from_tables_unchecked (n, std::move (meet), std::move (join));
  }

  ModalAlgebra relabel (const ModalAlgebra& m, std::span<const std::size_t> perm) {
    const auto n = m.size ();
    std::vector<std::size_t> inverse (n);
    for (std::size_t i = 0; i < n; ++i)
      inverse[perm[i]] = i;
    std::vector<Index> box (n);
    for (std::size_t i = 0; i < n; ++i)
      box[i] = static_cast<Index> (inverse[m.box (perm[i])]);
    return ModalAlgebra (relabel (m.base (), perm), std::move (box));
  }

  std::vector<DLattice> lattices (std::uint64_t seed, std::size_t max_elements) {
    Rng rng (seed);
    std::vector<DLattice> out;
    for (std::size_t n = 2; n <= max_elements; ++n)
      add_unique (out, DLattice::chain (n));
    // Every distributive lattice with m elements is Up(p) for a poset p with
    // at most m - 1 points, so posets up to max_elements - 1 points suffice.
    for (const auto& p : posets (seed, 400, max_elements > 1 ? max_elements - 1 : 0)) {
      try {
        auto d = from_upsets (p, max_elements).lattice;
        if (not d.trivial ())
          add_unique (out, std::move (d));
      } catch (const capacity_error&) {
      }
    }
    const auto canonical = out.size ();
    for (std::size_t i = 0; i < canonical; ++i) {
      auto perm = random_permutation (rng, out[i].size ());
      add_unique (out, relabel (out[i], perm));
    }
    return out;
  }

  std::vector<DLattice> booleans (std::uint64_t seed, std::size_t max_atoms) {
    Rng rng (seed);
    std::vector<DLattice> out;
    for (std::size_t k = 0; k <= max_atoms; ++k) {
      auto b = DLattice::powerset (k);
      auto perm = random_permutation (rng, b.size ());
      add_unique (out, relabel (b, perm));
      add_unique (out, std::move (b));
    }
    return out;
  }

  std::vector<RelSpace> relations (std::uint64_t seed, std::size_t random_count, std::size_t max_worlds) {
    Rng rng (seed);
    std::vector<RelSpace> out;
    for (std::size_t n = 1; n <= max_worlds; ++n) {
      out.push_back (RelSpace::identity (n));
      out.push_back (RelSpace::empty (n));
      std::vector<WorldSet> cycle (n), strict (n), reflexive (n);
      for (std::size_t x = 0; x < n; ++x) {
        cycle[x] = WorldSet {1} << ((x + 1) % n);
        strict[x] = all_worlds (n) & ~all_worlds (x + 1);
        reflexive[x] = strict[x] | WorldSet {1} << x;
      }
      out.emplace_back (std::move (cycle));
      out.emplace_back (std::move (strict));
      out.emplace_back (std::move (reflexive));
    }
    std::uniform_int_distribution<std::size_t> size (1, max_worlds);
    std::uniform_real_distribution<double> density (0.1, 0.6);
    for (std::size_t i = 0; i < random_count; ++i) {
      const auto n = size (rng);
      std::bernoulli_distribution edge (density (rng));
      std::vector<WorldSet> rows (n, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (edge (rng))
            rows[x] |= WorldSet {1} << y;
      out.emplace_back (std::move (rows));
    }
    return out;
  }

  std::vector<RelSpace> transitive_relations (std::uint64_t seed, std::size_t random_count,
                                              std::size_t max_worlds) {
    std::vector<RelSpace> out;
    for (std::size_t n = 1; n <= std::min<std::size_t> (3, max_worlds); ++n)
      for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code) {
        auto r = RelSpace::from_code (n, code);
        if (is_transitive (r))
          out.push_back (std::move (r));
      }
    if (max_worlds < 4)
      return out;
    Rng rng (seed);
    std::uniform_int_distribution<std::size_t> size (4, max_worlds);
    std::uniform_real_distribution<double> density (0.05, 0.4);
    for (std::size_t i = 0; i < random_count; ++i) {
      const auto n = size (rng);
      std::bernoulli_distribution edge (density (rng));
      std::vector<WorldSet> rows (n, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (edge (rng))
            rows[x] |= WorldSet {1} << y;
      // Transitive closure without adding reflexive pairs.
      RelSpace r (std::move (rows));
      out.push_back (compose (r, star_closure (r)));
    }
    return out;
  }

  std::vector<ModalAlgebra> modal_algebras (std::uint64_t seed, std::size_t count, std::size_t max_worlds) {
    Rng rng (seed);
    std::vector<ModalAlgebra> out;
    for (const auto& r : relations (seed, count, max_worlds)) {
      const auto m = algebra_from_space (r);
      const auto perm = random_permutation (rng, m.size ());
      out.push_back (relabel (m, perm));
    }
    return out;
  }

  DLattice pentagon () { return five_element ({{1, 2}}); }

  DLattice diamond () { return five_element ({}); }

}
