#include "finlat/modal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "finlat/errors.hpp"
#include "finlat/heyting.hpp"

namespace finlat {

  namespace {
    std::string str (std::size_t i) { return std::to_string (i); }

    // Packs the bits of m selected by c into the low bits, in order.
    WorldSet compress (WorldSet m, WorldSet c) {
      WorldSet out = 0;
      unsigned k = 0;
      for (; c; c &= c - 1, ++k)
        if (m & (c & -c))
          out |= WorldSet {1} << k;
      return out;
    }

    // Inverse of compress: spreads the low bits of m onto the positions of c.
    WorldSet expand (WorldSet m, WorldSet c) {
      WorldSet out = 0;
      for (unsigned k = 0; c; c &= c - 1, ++k)
        if (m >> k & 1u)
          out |= c & -c;
      return out;
    }

    template <typename F>
    void for_each_world (WorldSet s, F&& f) {
      for (; s; s &= s - 1)
        f (static_cast<std::size_t> (std::countr_zero (s)));
    }

    void same_size (const RelSpace& r, const RelSpace& s) {
      if (r.size () != s.size ())
        throw input_error ("relations on " + str (r.size ()) + " and " + str (s.size ()) + " worlds");
    }

    bool all_of_elements (std::size_t n, auto&& pred) {
      for (std::size_t a = 0; a < n; ++a)
        if (not pred (a))
          return false;
      return true;
    }
  }

  RelSpace::RelSpace (std::vector<WorldSet> rows) : rows_ (std::move (rows)) {
    const auto n = rows_.size ();
    if (n > max_worlds)
      throw capacity_error ("relation on " + str (n) + " worlds exceeds the bound of " + str (max_worlds));
    for (std::size_t x = 0; x < n; ++x)
      if (rows_[x] & ~all_worlds (n))
        throw input_error ("relation row " + str (x) + " mentions a world >= " + str (n));
  }

  RelSpace RelSpace::from_pairs (std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    if (n > max_worlds)
      throw capacity_error ("relation on " + str (n) + " worlds exceeds the bound of " + str (max_worlds));
    std::vector<WorldSet> rows (n, 0);
    for (auto [x, y] : pairs) {
      if (x >= n or y >= n)
        throw input_error ("relation pair (" + str (x) + ", " + str (y) + ") out of range");
      rows[x] |= WorldSet {1} << y;
    }
    return RelSpace (std::move (rows));
  }

  RelSpace RelSpace::identity (std::size_t n) {
    std::vector<WorldSet> rows (n);
    for (std::size_t x = 0; x < n; ++x)
      rows[x] = WorldSet {1} << x;
    return RelSpace (std::move (rows));
  }

  RelSpace RelSpace::from_code (std::size_t n, std::uint64_t code) {
    if (n * n > 64)
      throw capacity_error ("relation codes cover at most 8 worlds");
    std::vector<WorldSet> rows (n);
    for (std::size_t x = 0; x < n; ++x)
      rows[x] = (code >> (x * n)) & all_worlds (n);
    return RelSpace (std::move (rows));
  }

  WorldSet RelSpace::image (WorldSet u) const {
    WorldSet out = 0;
    for_each_world (u, [&] (std::size_t x) { out |= rows_[x]; });
    return out;
  }

  WorldSet RelSpace::box (WorldSet u) const {
    WorldSet out = 0;
    for (std::size_t x = 0; x < rows_.size (); ++x)
      if ((rows_[x] & ~u) == 0)
        out |= WorldSet {1} << x;
    return out;
  }

  RelSpace compose (const RelSpace& r, const RelSpace& s) {
    same_size (r, s);
    std::vector<WorldSet> rows (r.size ());
    for (std::size_t x = 0; x < r.size (); ++x)
      rows[x] = s.image (r.successors (x));
    return RelSpace (std::move (rows));
  }

  RelSpace converse (const RelSpace& r) {
    std::vector<WorldSet> rows (r.size (), 0);
    for (std::size_t x = 0; x < r.size (); ++x)
      for_each_world (r.successors (x), [&] (std::size_t y) { rows[y] |= WorldSet {1} << x; });
    return RelSpace (std::move (rows));
  }

  RelSpace relation_union (const RelSpace& r, const RelSpace& s) {
    same_size (r, s);
    auto rows = r.rows ();
    for (std::size_t x = 0; x < rows.size (); ++x)
      rows[x] |= s.successors (x);
    return RelSpace (std::move (rows));
  }

  bool contained_in (const RelSpace& r, const RelSpace& s) {
    same_size (r, s);
    for (std::size_t x = 0; x < r.size (); ++x)
      if (r.successors (x) & ~s.successors (x))
        return false;
    return true;
  }

  RelSpace relation_power (const RelSpace& r, std::size_t n) {
    auto out = RelSpace::identity (r.size ());
    for (std::size_t k = 0; k < n; ++k)
      out = compose (r, out);
    return out;
  }

  RelSpace star_closure (const RelSpace& r) {
    auto rows = r.rows ();
    const auto n = rows.size ();
    for (std::size_t x = 0; x < n; ++x)
      rows[x] |= WorldSet {1} << x;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if (rows[x] >> k & 1u)
          rows[x] |= rows[k];
    return RelSpace (std::move (rows));
  }

  RelSpace restriction (const RelSpace& r, WorldSet c) {
    if (c & ~r.worlds ())
      throw input_error ("world set mentions a world outside the space");
    std::vector<WorldSet> rows;
    for_each_world (c, [&] (std::size_t x) { rows.push_back (compress (r.successors (x) & c, c)); });
    return RelSpace (std::move (rows));
  }

  bool is_reflexive (const RelSpace& r) {
    for (std::size_t x = 0; x < r.size (); ++x)
      if (not r.rel (x, x))
        return false;
    return true;
  }

  bool is_transitive (const RelSpace& r) { return contained_in (compose (r, r), r); }

  ModalAlgebra::ModalAlgebra (DLattice base, std::vector<Index> box)
    : base_ (std::move (base)), box_ (std::move (box)) {
    const auto n = base_.size ();
    if (box_.size () != n)
      throw input_error ("box table has " + str (box_.size ()) + " entries for " + str (n) + " elements");
    neg_.resize (n);
    for (std::size_t a = 0; a < n; ++a) {
      auto c = complement (base_, static_cast<Index> (a));
      if (not c)
        throw input_error ("base is not Boolean: element " + str (a) + " has no complement");
      neg_[a] = *c;
      if (box_[a] >= n)
        throw input_error ("box(" + str (a) + ") = " + str (box_[a]) + " is out of range");
    }
    if (box_[base_.top ()] != base_.top ())
      throw input_error ("box does not preserve the top element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (box_[base_.meet (a, b)] != base_.meet (box_[a], box_[b]))
          throw input_error ("box does not preserve the meet of " + str (a) + " and " + str (b));
  }

  bool box_preserves_meets (const ModalAlgebra& m) {
    const auto& d = m.base ();
    if (m.box (d.top ()) != d.top ())
      return false;
    for (std::size_t a = 0; a < m.size (); ++a)
      for (std::size_t b = 0; b < m.size (); ++b)
        if (m.box (d.meet (a, b)) != d.meet (m.box (a), m.box (b)))
          return false;
    return true;
  }

  bool diamond_preserves_joins (const ModalAlgebra& m) {
    const auto& d = m.base ();
    if (m.diamond (d.bottom ()) != d.bottom ())
      return false;
    for (std::size_t a = 0; a < m.size (); ++a)
      for (std::size_t b = 0; b < m.size (); ++b)
        if (m.diamond (d.join (a, b)) != d.join (m.diamond (a), m.diamond (b)))
          return false;
    return true;
  }

  ModalAlgebra algebra_from_space (const RelSpace& s, std::size_t max_lattice) {
    auto base = DLattice::powerset (s.size (), max_lattice);
    std::vector<Index> box (base.size ());
    for (std::size_t u = 0; u < base.size (); ++u)
      box[u] = static_cast<Index> (s.box (u));
    return ModalAlgebra (std::move (base), std::move (box));
  }

  JonssonTarski space_from_algebra (const ModalAlgebra& m) {
    const auto& d = m.base ();
    if (d.trivial ())
      throw domain_error ("the trivial algebra has no ultrafilters");
    JonssonTarski out;
    for (auto& p : enumerate_prime_filters (d))
      out.ultrafilters.push_back (std::move (p.filter.members));
    const auto k = out.ultrafilters.size ();
    if (k > 15)
      throw capacity_error ("dual space with " + str (k) + " worlds exceeds the powerset bound");

    for (const auto& u : out.ultrafilters) {
      Index least = d.top ();
      for_each_member (u, [&] (std::size_t a) { least = d.meet (least, a); });
      out.atoms.push_back (least);
    }

    std::vector<WorldSet> rows (k, 0);
    out.diamond_form_agrees = true;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        bool related = true;
        for (std::size_t a = 0; a < m.size () and related; ++a)
          if (out.ultrafilters[x].test (m.box (a)) and not out.ultrafilters[y].test (a))
            related = false;
        if (related)
          rows[x] |= WorldSet {1} << y;
        if (related != d.leq (out.atoms[x], m.diamond (out.atoms[y])))
          out.diamond_form_agrees = false;
      }
    out.space = RelSpace (std::move (rows));

    std::vector<Index> rep (m.size ());
    for (std::size_t a = 0; a < m.size (); ++a) {
      WorldSet w = 0;
      for (std::size_t x = 0; x < k; ++x)
        if (out.ultrafilters[x].test (a))
          w |= WorldSet {1} << x;
      out.representation.push_back (w);
      rep[a] = static_cast<Index> (w);
    }
    out.iso = m.size () == (std::size_t {1} << k) and
              is_lattice_embedding (d, DLattice::powerset (k), rep);
    for (std::size_t a = 0; a < m.size () and out.iso; ++a)
      out.iso = out.representation[m.box (a)] == out.space.box (out.representation[a]);
    return out;
  }

  SpaceRoundTrip round_trip_space (const RelSpace& s) {
    if (s.size () == 0)
      return {{}, true};
    const auto jt = space_from_algebra (algebra_from_space (s));
    SpaceRoundTrip out;
    for (std::size_t x = 0; x < s.size (); ++x) {
      const auto singleton = std::size_t {1} << x;
      auto it = std::find_if (jt.ultrafilters.begin (), jt.ultrafilters.end (),
                              [&] (const ElementSet& u) { return u.test (singleton); });
      out.map.push_back (static_cast<std::size_t> (it - jt.ultrafilters.begin ()));
    }
    out.iso = jt.space.size () == s.size ();
    std::vector<bool> hit (s.size (), false);
    for (auto i : out.map) {
      if (i >= s.size () or hit[i]) {
        out.iso = false;
        return out;
      }
      hit[i] = true;
    }
    for (std::size_t x = 0; x < s.size (); ++x)
      for (std::size_t y = 0; y < s.size (); ++y)
        if (s.rel (x, y) != jt.space.rel (out.map[x], out.map[y]))
          out.iso = false;
    return out;
  }

  ClassVerdict class_checks (const ModalAlgebra& m, unsigned max_n) {
    const auto& d = m.base ();
    const auto n = m.size ();
    ClassVerdict v;
    v.k4 = all_of_elements (n, [&] (std::size_t a) { return d.leq (m.box (a), m.box (m.box (a))); });
    v.s4 = v.k4 and all_of_elements (n, [&] (std::size_t a) { return d.leq (m.box (a), a); });

    // acc[a] = meet of box^k a for k <= level, cur[a] = box^level a.
    std::vector<Index> acc (n), cur (n);
    for (std::size_t a = 0; a < n; ++a)
      acc[a] = cur[a] = static_cast<Index> (a);
    bool found = false;
    for (unsigned level = 0; level <= max_n or not found; ++level) {
      if (level > n and not found)
        throw std::logic_error ("modal algebra with no transitivity level");
      bool holds = true;
      for (std::size_t a = 0; a < n; ++a) {
        cur[a] = m.box (cur[a]);
        holds = holds and d.leq (acc[a], cur[a]);
        acc[a] = d.meet (acc[a], cur[a]);
      }
      if (level <= max_n)
        v.n_transitive.push_back (holds);
      if (holds and not found) {
        found = true;
        v.least_transitivity = level;
      }
    }
    return v;
  }

  ClassVerdict class_checks (const RelSpace& s, unsigned max_n) {
    ClassVerdict v;
    v.k4 = is_transitive (s);
    v.s4 = v.k4 and is_reflexive (s);

    auto union_upto = RelSpace::identity (s.size ());
    auto power = union_upto;
    bool found = false;
    for (unsigned level = 0; level <= max_n or not found; ++level) {
      if (level > s.size () + 1 and not found)
        throw std::logic_error ("relation with no transitivity level");
      power = compose (s, power);
      const bool holds = contained_in (power, union_upto);
      union_upto = relation_union (union_upto, power);
      if (level <= max_n)
        v.n_transitive.push_back (holds);
      if (holds and not found) {
        found = true;
        v.least_transitivity = level;
      }
    }
    return v;
  }

  ReflexivizedAlgebra reflexivize (const ModalAlgebra& m, ClaimMode mode) {
    const bool k4 = class_checks (m, 0).k4;
    if (not k4 and mode == ClaimMode::strict)
      throw precondition_error ("reflexivization needs a K4 algebra");
    std::vector<Index> box (m.size ());
    for (std::size_t a = 0; a < m.size (); ++a)
      box[a] = m.base ().meet (a, m.box (a));
    ReflexivizedAlgebra out {ModalAlgebra (m.base (), std::move (box)), k4, false};
    if (k4)
      out.s4_verified = class_checks (out.algebra, 0).s4;
    return out;
  }

  ReflexivizedSpace reflexivize (const RelSpace& s, ClaimMode mode) {
    const bool k4 = is_transitive (s);
    if (not k4 and mode == ClaimMode::strict)
      throw precondition_error ("reflexivization needs a transitive relation");
    ReflexivizedSpace out {relation_union (s, RelSpace::identity (s.size ())), k4, false};
    if (k4)
      out.qmax_preserved = qmax (s, s.worlds ()) == qmax (out.space, s.worlds ());
    return out;
  }

  WorldSet qmax (const RelSpace& s, WorldSet c) {
    WorldSet out = 0;
    for_each_world (c, [&] (std::size_t x) {
      bool maximal = true;
      for_each_world (s.successors (x) & c, [&] (std::size_t y) { maximal = maximal and s.rel (y, x); });
      if (maximal)
        out |= WorldSet {1} << x;
    });
    return out;
  }

  WorldSet eqmax (const RelSpace& s, WorldSet c) {
    const auto closed = star_closure (restriction (s, c));
    return expand (qmax (closed, closed.worlds ()), c);
  }

  WtmaxCheck wtmax_check (const RelSpace& s, WorldSet c) {
    const auto r = restriction (s, c);
    const auto star = star_closure (r);
    const auto m = r.size ();
    WtmaxCheck out;
    auto power = RelSpace::identity (m);
    for (std::size_t n = 0; n <= m * m + m; ++n) {
      if (power == star) {
        out.applicable = true;
        out.power = n;
        break;
      }
      power = compose (r, power);
    }
    out.eqmax = eqmax (s, c);
    if (out.applicable) {
      out.qmax_power = expand (qmax (power, power.worlds ()), c);
      out.agrees = out.qmax_power == out.eqmax;
    }
    return out;
  }

  Relativization relativize (const ModalAlgebra& m, Index a) {
    const auto& d = m.base ();
    if (a >= d.size ())
      throw input_error ("element " + str (a) + " out of range");
    if (a == d.bottom ())
      throw domain_error ("relativization to the bottom element");
    const auto below = members (d.down (a));
    const auto k = below.size ();
    std::vector<std::size_t> position (d.size (), k);
    for (std::size_t i = 0; i < k; ++i)
      position[below[i]] = i;

    std::vector<Index> meet (k * k), join (k * k), box (k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        meet[i * k + j] = static_cast<Index> (position[d.meet (below[i], below[j])]);
        join[i * k + j] = static_cast<Index> (position[d.join (below[i], below[j])]);
      }
      const auto implies = d.join (m.neg (a), below[i]);
      box[i] = static_cast<Index> (position[d.meet (a, m.box (implies))]);
    }
    std::vector<Index> elements (below.begin (), below.end ());
    Relativization out {
      ModalAlgebra (DLattice::from_tables_unchecked (k, std::move (meet), std::move (join)), std::move (box)),
      std::move (elements), true};
    if (class_checks (m, 0).k4)
      out.k4_inherited = class_checks (out.algebra, 0).k4;
    return out;
  }

  RelativizationDualCheck relativize_dual_check (const RelSpace& s, WorldSet c) {
    if (c == 0)
      throw domain_error ("relativization to the empty world set");
    const auto m = algebra_from_space (s);
    RelativizationDualCheck out {relativize (m, static_cast<Index> (c)),
                                 algebra_from_space (restriction (s, c)), {}, false};
    const auto& rel = out.relativized.algebra;
    const auto& res = out.restricted;
    for (auto e : out.relativized.elements)
      out.map.push_back (static_cast<Index> (compress (e, c)));

    out.iso = rel.size () == res.size ();
    std::vector<bool> hit (res.size (), false);
    for (auto i : out.map) {
      if (not out.iso or i >= res.size () or hit[i]) {
        out.iso = false;
        return out;
      }
      hit[i] = true;
    }
    const auto& rb = rel.base ();
    const auto& sb = res.base ();
    for (std::size_t i = 0; i < rel.size () and out.iso; ++i) {
      out.iso = out.map[rel.box (i)] == res.box (out.map[i]);
      for (std::size_t j = 0; j < rel.size () and out.iso; ++j)
        out.iso = out.map[rb.meet (i, j)] == sb.meet (out.map[i], out.map[j]) and
                  out.map[rb.join (i, j)] == sb.join (out.map[i], out.map[j]);
    }
    return out;
  }

  FamaxResult famax_quotient (const DLattice& b, const ElementSet& f) {
    if (auto bad = complement_free_element (b))
      throw domain_error ("not a Boolean algebra: element " + str (*bad) + " has no complement");
    if (f.size () != b.size () or not is_filter (b, f) or f.test (b.bottom ()))
      throw precondition_error ("expected a proper filter");

    auto q = quotient_lattice (b, congruence_of_filter (b, f));
    std::vector<Index> identity (q.lattice.size ());
    for (std::size_t a = 0; a < identity.size (); ++a)
      identity[a] = static_cast<Index> (a);
    const ModalAlgebra quotient_algebra (q.lattice, std::move (identity));
    auto jt = space_from_algebra (quotient_algebra);
    const auto candidates = qmax (jt.space, jt.space.worlds ());
    if (candidates == 0)
      throw std::logic_error ("identity box with no quasi-maximal ultrafilter");
    const auto chosen = static_cast<std::size_t> (std::countr_zero (candidates));

    FamaxResult out {std::move (q), std::move (jt.ultrafilters[chosen]), ElementSet (b.size ()), false, false};
    for (std::size_t a = 0; a < b.size (); ++a)
      if (out.quotient_ultrafilter.test (out.quotient.projection[a]))
        out.pullback.set (a);
    out.is_ultrafilter = is_filter (b, out.pullback) and not out.pullback.test (b.bottom ());
    for (std::size_t a = 0; a < b.size () and out.is_ultrafilter; ++a)
      out.is_ultrafilter = out.pullback.test (a) or out.pullback.test (*complement (b, static_cast<Index> (a)));
    out.extends_filter = f.is_subset_of (out.pullback);
    return out;
  }

  DLattice fixpoint_lattice (const RelSpace& s, std::span<const Index> fixpoints) {
    const auto k = fixpoints.size ();
    auto index = [&] (std::size_t u) {
      auto it = std::lower_bound (fixpoints.begin (), fixpoints.end (), u);
      if (it == fixpoints.end () or *it != u)
        throw std::logic_error ("box fixpoints of " + str (s.size ()) + " worlds not closed under union and intersection");
      return static_cast<Index> (it - fixpoints.begin ());
    };
    std::vector<Index> meet (k * k), join (k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        meet[i * k + j] = index (fixpoints[i] & fixpoints[j]);
        join[i * k + j] = index (fixpoints[i] | fixpoints[j]);
      }
    return DLattice::from_tables (k, std::move (meet), std::move (join));
  }

  ClusterQuotient cluster_quotient (const RelSpace& s) {
    if (not is_reflexive (s) or not is_transitive (s))
      throw precondition_error ("cluster quotient needs a quasi-order");
    const auto n = s.size ();
    if (n >= 14)
      throw capacity_error ("box fixpoints over " + str (n) + " worlds exceed the lattice bound");
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t x = 0; x < n; ++x)
      for_each_world (s.successors (x), [&] (std::size_t y) { rows[x].set (y); });

    auto class_of = cluster_partition (rows);
    ClusterQuotient out {quotient (rows, class_of), std::move (class_of), {}, false, false, false};
    for (WorldSet u = 0; u <= s.worlds (); ++u)
      if (s.box (u) == u)
        out.fixpoints.push_back (static_cast<Index> (u));

    const auto lattice = fixpoint_lattice (s, out.fixpoints);
    try {
      compute_arrow (lattice);
      out.fixpoints_heyting = true;
    } catch (const input_error&) {
      out.fixpoints_heyting = false;
    }

    const auto k = out.poset.size ();
    const auto up = from_upsets (out.poset);
    std::vector<Index> map;
    out.upset_iso = up.upsets.size () == out.fixpoints.size ();
    for (auto u : out.fixpoints) {
      ElementSet image (k);
      for_each_world (u, [&] (std::size_t x) { image.set (out.class_of[x]); });
      auto idx = up.index_of (image);
      if (not idx) {
        out.upset_iso = false;
        break;
      }
      map.push_back (*idx);
    }
    out.upset_iso = out.upset_iso and is_lattice_embedding (lattice, up.lattice, map);

    const auto q = qmax (s, s.worlds ());
    const auto maxima = max_points (out.poset, full_set (k));
    out.qmax_matches_max = true;
    for (std::size_t x = 0; x < n; ++x)
      if (static_cast<bool> (q >> x & 1u) != maxima.test (out.class_of[x]))
        out.qmax_matches_max = false;
    return out;
  }

}
