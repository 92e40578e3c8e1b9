#include "finlat/duality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "finlat/errors.hpp"

namespace finlat {

  namespace {
    std::string str (std::size_t i) { return std::to_string (i); }

    Poset inclusion_order (const std::vector<ElementSet>& sets) {
      const auto k = sets.size ();
      std::vector<ElementSet> rows (k, ElementSet (k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (sets[i].is_subset_of (sets[j]))
            rows[i].set (j);
      return Poset (std::move (rows));
    }

    std::size_t find_set (const std::vector<ElementSet>& sets, const ElementSet& s) {
      auto it = std::find (sets.begin (), sets.end (), s);
      return static_cast<std::size_t> (it - sets.begin ());
    }

    Congruence canonical_ids (std::vector<std::size_t> root) {
      const auto n = root.size ();
      Congruence ids (n);
      std::vector<std::size_t> id_of_root (n, n);
      std::size_t next = 0;
      for (std::size_t x = 0; x < n; ++x) {
        auto& id = id_of_root[root[x]];
        if (id == n)
          id = next++;
        ids[x] = id;
      }
      return ids;
    }

    void check_congruence (const DLattice& d, const Congruence& c) {
      const auto n = d.size ();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          if (c[x] != c[y])
            continue;
          for (std::size_t z = 0; z < n; ++z) {
            if (c[d.meet (x, z)] != c[d.meet (y, z)])
              throw well_definedness_error (
                "not a congruence: " + str (x) + " ~ " + str (y) + " but " + str (x) + " ^ " +
                str (z) + " = " + str (d.meet (x, z)) + " and " + str (y) + " ^ " + str (z) +
                " = " + str (d.meet (y, z)) + " are not related");
            if (c[d.join (x, z)] != c[d.join (y, z)])
              throw well_definedness_error (
                "not a congruence: " + str (x) + " ~ " + str (y) + " but " + str (x) + " v " +
                str (z) + " = " + str (d.join (x, z)) + " and " + str (y) + " v " + str (z) +
                " = " + str (d.join (y, z)) + " are not related");
          }
        }
    }
  }

  PriestleyDual priestley_dual (const DLattice& d) {
    auto primes = enumerate_prime_filters (d);
    std::vector<ElementSet> points;
    points.reserve (primes.size ());
    for (auto& p : primes)
      points.push_back (std::move (p.filter.members));

    PriestleyDual out {inclusion_order (points), {}};
    auto& w = out.witness;
    const auto k = points.size ();
    for (std::size_t a = 0; a < d.size (); ++a) {
      ElementSet sigma (k);
      for (std::size_t i = 0; i < k; ++i)
        if (points[i].test (a))
          sigma.set (i);
      w.forward.push_back (std::move (sigma));
    }
    w.backward = std::move (points);

    auto upsets = from_upsets (out.space);
    w.iso = upsets.upsets.size () == d.size ();
    for (const auto& sigma : w.forward) {
      auto idx = upsets.index_of (sigma);
      if (not idx) {
        w.iso = false;
        w.upset_index.push_back (0);
      } else
        w.upset_index.push_back (*idx);
    }
    w.iso = w.iso and is_lattice_embedding (d, upsets.lattice, w.upset_index);
    return out;
  }

  PosetRoundTrip round_trip_poset (const Poset& p) {
    if (p.size () == 0)
      return {{}, true};
    auto up = from_upsets (p);
    auto dual = priestley_dual (up.lattice);
    PosetRoundTrip out;
    for (std::size_t x = 0; x < p.size (); ++x) {
      ElementSet filter (up.upsets.size ());
      for (std::size_t u = 0; u < up.upsets.size (); ++u)
        if (up.upsets[u].test (x))
          filter.set (u);
      out.map.push_back (find_set (dual.witness.backward, filter));
    }
    out.iso = is_order_isomorphism (p, dual.space, out.map);
    return out;
  }

  LatticeRoundTrip round_trip_lattice (const DLattice& d) {
    auto dual = priestley_dual (d);
    return {std::move (dual.witness.upset_index), dual.witness.iso};
  }

  StoneDual stone_dual (const DLattice& b) {
    if (auto bad = complement_free_element (b))
      throw domain_error ("not a Boolean algebra: element " + str (*bad) + " has no complement");
    StoneDual out {Poset::antichain (0), {}, 0};
    for (std::size_t a = 0; a < b.size (); ++a)
      if (a != b.bottom () and (b.down (a)).count () == 2)
        ++out.atoms;
    if (b.trivial ())
      return out;
    auto dual = priestley_dual (b);
    for (std::size_t i = 0; i < dual.space.size (); ++i)
      if (dual.space.up (i).count () != 1)
        throw std::logic_error ("ultrafilters of a Boolean algebra are not an antichain");
    out.space = std::move (dual.space);
    out.ultrafilters = std::move (dual.witness.backward);
    return out;
  }

  Congruence congruence_from_pairs (const DLattice& d,
                                    std::span<const std::pair<Index, Index>> kernel) {
    const auto n = d.size ();
    std::vector<std::size_t> parent (n);
    std::iota (parent.begin (), parent.end (), 0);
    auto find = [&] (std::size_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [x, y] : kernel) {
      if (x >= n or y >= n)
        throw input_error ("kernel pair (" + str (x) + ", " + str (y) + ") out of range");
      auto rx = find (x), ry = find (y);
      if (rx != ry)
        parent[std::max (rx, ry)] = std::min (rx, ry);
    }
    std::vector<std::size_t> root (n);
    for (std::size_t x = 0; x < n; ++x)
      root[x] = find (x);
    auto c = canonical_ids (std::move (root));
    check_congruence (d, c);
    return c;
  }

  Congruence congruence_of_filter (const DLattice& d, const ElementSet& f) {
    if (not is_filter (d, f))
      throw precondition_error ("element set is not a filter");
    const auto n = d.size ();
    std::vector<std::size_t> root (n);
    for (std::size_t x = 0; x < n; ++x) {
      root[x] = x;
      for (std::size_t y = 0; y < x; ++y) {
        bool related = false;
        for_each_member (f, [&] (std::size_t g) {
          related = related or d.meet (x, g) == d.meet (y, g);
        });
        if (related) {
          root[x] = root[y];
          break;
        }
      }
    }
    auto c = canonical_ids (std::move (root));
    check_congruence (d, c);
    return c;
  }

  QuotientLattice quotient_lattice (const DLattice& d, const Congruence& c) {
    const auto n = d.size ();
    if (c.size () != n)
      throw input_error ("congruence covers " + str (c.size ()) + " of " + str (n) + " elements");
    std::size_t k = 0;
    for (auto id : c)
      k = std::max (k, id + 1);
    std::vector<std::size_t> rep (k, n);
    for (std::size_t x = 0; x < n; ++x)
      if (rep[c[x]] == n)
        rep[c[x]] = x;
    std::vector<Index> meet (k * k), join (k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        meet[a * k + b] = static_cast<Index> (c[d.meet (rep[a], rep[b])]);
        join[a * k + b] = static_cast<Index> (c[d.join (rep[a], rep[b])]);
      }
    QuotientLattice out {DLattice::from_tables_unchecked (k, std::move (meet), std::move (join)), {}};
    out.projection.reserve (n);
    for (auto id : c)
      out.projection.push_back (static_cast<Index> (id));
    return out;
  }

  SubspaceEmbedding surjection_to_subspace (const DLattice& d,
                                            std::span<const std::pair<Index, Index>> kernel) {
    auto c = congruence_from_pairs (d, kernel);
    auto q = quotient_lattice (d, c);
    auto ambient = priestley_dual (d);
    std::vector<ElementSet> q_points;
    Poset q_dual = Poset::antichain (0);
    if (not q.lattice.trivial ()) {
      auto pd = priestley_dual (q.lattice);
      q_dual = std::move (pd.space);
      q_points = std::move (pd.witness.backward);
    }

    SubspaceEmbedding out {std::move (q), std::move (q_dual), std::move (ambient), {}, true, true, true};
    const auto& pts = out.ambient_dual.witness.backward;
    for (const auto& g : q_points) {
      ElementSet pre (d.size ());
      for (std::size_t a = 0; a < d.size (); ++a)
        if (g.test (out.quotient.projection[a]))
          pre.set (a);
      out.embedding.push_back (find_set (pts, pre));
    }
    const auto k = out.embedding.size ();
    ElementSet image (pts.size ());
    for (auto e : out.embedding) {
      if (e >= pts.size () or image.test (e)) {
        out.injective = false;
        out.order_embedding = false;
        out.image_is_saturated = false;
        return out;
      }
      image.set (e);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (out.quotient_dual.leq (i, j) !=
            out.ambient_dual.space.leq (out.embedding[i], out.embedding[j]))
          out.order_embedding = false;
    for (std::size_t p = 0; p < pts.size (); ++p) {
      bool saturated = true;
      for (std::size_t x = 0; x < d.size (); ++x)
        for (std::size_t y = 0; y < d.size (); ++y)
          if (c[x] == c[y] and pts[p].test (x) != pts[p].test (y))
            saturated = false;
      if (saturated != image.test (p))
        out.image_is_saturated = false;
    }
    return out;
  }

}
