#include "finlat/dlattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "finlat/errors.hpp"

namespace finlat {

  namespace {
    std::string str (std::size_t i) { return std::to_string (i); }

    void check_lattice_size (std::size_t n, std::size_t max_lattice) {
      const auto bound = std::min<std::size_t> (max_lattice, 65535);
      if (n > bound)
        throw capacity_error ("lattice of " + str (n) + " elements exceeds the bound of " +
                              str (bound) + " elements");
    }

    ElementSet join_closed_downset_extend (const DLattice& d, const ElementSet& s) {
      // Smallest ideal containing s: downward closure of the join of s.
      Index j = d.bottom ();
      for_each_member (s, [&] (std::size_t x) { j = d.join (j, x); });
      return d.down (j);
    }
  }

  // ---- DLattice -------------------------------------------------------------

  DLattice::DLattice (std::size_t n, std::vector<Index> meet, std::vector<Index> join)
    : n_ (n), meet_ (std::move (meet)), join_ (std::move (join)) {
    if (n_ == 0)
      throw input_error ("a bounded lattice needs at least one element");
    if (n_ > 65535)
      throw capacity_error ("lattice of " + str (n_) + " elements exceeds the index range");
    if (meet_.size () != n_ * n_ or join_.size () != n_ * n_)
      throw input_error ("meet/join tables must have " + str (n_ * n_) + " entries");
    for (std::size_t k = 0; k < n_ * n_; ++k)
      if (meet_[k] >= n_ or join_[k] >= n_)
        throw input_error ("table entry at (" + str (k / n_) + ", " + str (k % n_) +
                           ") is out of range");

    up_.assign (n_, ElementSet (n_));
    down_.assign (n_, ElementSet (n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (meet_[a * n_ + b] == a) {
          up_[a].set (b);
          down_[b].set (a);
        }

    bool found_bottom = false, found_top = false;
    for (std::size_t a = 0; a < n_; ++a) {
      if (not found_bottom and up_[a].all ()) {
        bottom_ = static_cast<Index> (a);
        found_bottom = true;
      }
      if (not found_top and down_[a].all ()) {
        top_ = static_cast<Index> (a);
        found_top = true;
      }
    }
    if (not found_bottom or not found_top)
      throw input_error ("lattice has no bottom or no top element");
  }

  std::optional<std::string> lattice_violation (std::size_t n, std::span<const Index> m,
                                                std::span<const Index> j) {
    if (n == 0)
      return "empty carrier";
    if (m.size () != n * n or j.size () != n * n)
      return "tables must have " + str (n * n) + " entries";
    for (std::size_t k = 0; k < n * n; ++k)
      if (m[k] >= n or j[k] >= n)
        return "table entry at (" + str (k / n) + ", " + str (k % n) + ") is out of range";
    auto M = [&] (std::size_t a, std::size_t b) -> std::size_t { return m[a * n + b]; };
    auto J = [&] (std::size_t a, std::size_t b) -> std::size_t { return j[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      if (M (a, a) != a or J (a, a) != a)
        return "not idempotent at " + str (a);
      for (std::size_t b = 0; b < n; ++b) {
        if (M (a, b) != M (b, a) or J (a, b) != J (b, a))
          return "not commutative at (" + str (a) + ", " + str (b) + ")";
        if (M (a, J (a, b)) != a or J (a, M (a, b)) != a)
          return "absorption fails at (" + str (a) + ", " + str (b) + ")";
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const auto triple = "(" + str (a) + ", " + str (b) + ", " + str (c) + ")";
          if (M (a, M (b, c)) != M (M (a, b), c) or J (a, J (b, c)) != J (J (a, b), c))
            return "not associative at " + triple;
          if (M (a, J (b, c)) != J (M (a, b), M (a, c)))
            return "not distributive at " + triple;
        }
    bool has_bottom = false, has_top = false;
    for (std::size_t a = 0; a < n; ++a) {
      bool bot = true, top = true;
      for (std::size_t b = 0; b < n; ++b) {
        bot = bot and M (a, b) == a;
        top = top and J (a, b) == a;
      }
      has_bottom = has_bottom or bot;
      has_top = has_top or top;
    }
    if (not has_bottom or not has_top)
      return "no bottom or no top element";
    return std::nullopt;
  }

  DLattice DLattice::from_tables (std::size_t n, std::vector<Index> meet, std::vector<Index> join) {
    if (auto v = lattice_violation (n, meet, join))
      throw input_error ("invalid distributive lattice: " + *v);
    return DLattice (n, std::move (meet), std::move (join));
  }

  DLattice DLattice::from_tables_unchecked (std::size_t n, std::vector<Index> meet,
                                            std::vector<Index> join) {
    return DLattice (n, std::move (meet), std::move (join));
  }

  DLattice DLattice::powerset (std::size_t k, std::size_t max_lattice) {
    if (k >= 16)
      throw capacity_error ("powerset of " + str (k) + " points exceeds the index range");
    const std::size_t n = std::size_t {1} << k;
    check_lattice_size (n, max_lattice);
    std::vector<Index> meet (n * n), join (n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        meet[a * n + b] = static_cast<Index> (a & b);
        join[a * n + b] = static_cast<Index> (a | b);
      }
    return DLattice (n, std::move (meet), std::move (join));
  }

  DLattice DLattice::chain (std::size_t n) {
    check_lattice_size (n, 65535);
    std::vector<Index> meet (n * n), join (n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        meet[a * n + b] = static_cast<Index> (std::min (a, b));
        join[a * n + b] = static_cast<Index> (std::max (a, b));
      }
    return DLattice (n, std::move (meet), std::move (join));
  }

  DLattice order_dual (const DLattice& d) {
    return DLattice::from_tables_unchecked (d.size (), d.join_table (), d.meet_table ());
  }

  Poset order_of (const DLattice& d) {
    std::vector<ElementSet> rows;
    rows.reserve (d.size ());
    for (std::size_t a = 0; a < d.size (); ++a)
      rows.push_back (d.up (a));
    return Poset (std::move (rows));
  }

  std::optional<Index> complement (const DLattice& d, Index a) {
    for (std::size_t b = 0; b < d.size (); ++b)
      if (d.meet (a, b) == d.bottom () and d.join (a, b) == d.top ())
        return static_cast<Index> (b);
    return std::nullopt;
  }

  std::optional<Index> complement_free_element (const DLattice& d) {
    for (std::size_t a = 0; a < d.size (); ++a)
      if (not complement (d, static_cast<Index> (a)))
        return static_cast<Index> (a);
    return std::nullopt;
  }

  bool is_lattice_embedding (const DLattice& from, const DLattice& to, std::span<const Index> map) {
    if (map.size () != from.size ())
      return false;
    ElementSet hit (to.size ());
    for (auto m : map) {
      if (m >= to.size () or hit.test (m))
        return false;
      hit.set (m);
    }
    if (map[from.bottom ()] != to.bottom () or map[from.top ()] != to.top ())
      return false;
    for (std::size_t a = 0; a < from.size (); ++a)
      for (std::size_t b = 0; b < from.size (); ++b)
        if (map[from.meet (a, b)] != to.meet (map[a], map[b]) or
            map[from.join (a, b)] != to.join (map[a], map[b]))
          return false;
    return true;
  }

  std::optional<std::vector<Index>> find_lattice_isomorphism (const DLattice& a, const DLattice& b) {
    if (a.size () != b.size ())
      return std::nullopt;
    auto iso = find_isomorphism (order_of (a), order_of (b));
    if (not iso)
      return std::nullopt;
    std::vector<Index> map (iso->begin (), iso->end ());
    if (not is_lattice_embedding (a, b, map))
      return std::nullopt;
    return map;
  }

  DLattice sublattice (const DLattice& d, std::span<const Index> elements) {
    const auto k = elements.size ();
    std::vector<std::size_t> position (d.size (), k);
    for (std::size_t i = 0; i < k; ++i)
      position[elements[i]] = i;
    std::vector<Index> meet (k * k), join (k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const auto m = position[d.meet (elements[i], elements[j])];
        const auto s = position[d.join (elements[i], elements[j])];
        if (m == k or s == k)
          throw input_error ("element subset is not closed under meet and join at (" +
                             str (elements[i]) + ", " + str (elements[j]) + ")");
        meet[i * k + j] = static_cast<Index> (m);
        join[i * k + j] = static_cast<Index> (s);
      }
    return DLattice::from_tables_unchecked (k, std::move (meet), std::move (join));
  }

  // ---- Upset lattices -------------------------------------------------------

  std::vector<ElementSet> enumerate_upsets (const Poset& p, std::size_t max_count) {
    // Decide elements from the top of a linear extension downwards. x may be
    // added once everything strictly above it is in; leaving x out then
    // blocks everything below it, so every leaf is an upset.
    auto order = linear_extension (p);
    std::reverse (order.begin (), order.end ());
    std::vector<ElementSet> out;
    ElementSet current (p.size ());

    auto rec = [&] (auto& self, std::size_t depth) -> void {
      if (depth == order.size ()) {
        if (out.size () == max_count)
          throw capacity_error ("poset has more than " + str (max_count) + " upsets");
        out.push_back (current);
        return;
      }
      const auto x = order[depth];
      self (self, depth + 1);
      auto strictly_above = p.up (x);
      strictly_above.reset (x);
      if (strictly_above.is_subset_of (current)) {
        current.set (x);
        self (self, depth + 1);
        current.reset (x);
      }
    };
    rec (rec, 0);
    std::sort (out.begin (), out.end ());
    return out;
  }

  std::optional<Index> UpsetLattice::index_of (const ElementSet& upset) const {
    auto it = std::lower_bound (upsets.begin (), upsets.end (), upset);
    if (it == upsets.end () or *it != upset)
      return std::nullopt;
    return static_cast<Index> (it - upsets.begin ());
  }

  UpsetLattice from_upsets (const Poset& p, std::size_t max_lattice) {
    const auto bound = std::min<std::size_t> (max_lattice, 65535);
    auto upsets = enumerate_upsets (p, bound);
    const auto n = upsets.size ();
    std::map<ElementSet, Index> index;
    for (std::size_t i = 0; i < n; ++i)
      index.emplace (upsets[i], static_cast<Index> (i));
    std::vector<Index> meet (n * n), join (n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        meet[a * n + b] = meet[b * n + a] = index.at (upsets[a] & upsets[b]);
        join[a * n + b] = join[b * n + a] = index.at (upsets[a] | upsets[b]);
      }
    return {DLattice::from_tables_unchecked (n, std::move (meet), std::move (join)),
            std::move (upsets)};
  }

  // ---- Filters and ideals ---------------------------------------------------

  bool is_ideal (const DLattice& d, const ElementSet& s) {
    if (s.size () != d.size () or s.none ())
      return false;
    bool ok = true;
    for_each_member (s, [&] (std::size_t x) {
      ok = ok and d.down (x).is_subset_of (s);
    });
    if (not ok)
      return false;
    for_each_member (s, [&] (std::size_t x) {
      for_each_member (s, [&] (std::size_t y) { ok = ok and s.test (d.join (x, y)); });
    });
    return ok;
  }

  bool is_filter (const DLattice& d, const ElementSet& s) {
    if (s.size () != d.size () or s.none ())
      return false;
    bool ok = true;
    for_each_member (s, [&] (std::size_t x) {
      ok = ok and d.up (x).is_subset_of (s);
    });
    if (not ok)
      return false;
    for_each_member (s, [&] (std::size_t x) {
      for_each_member (s, [&] (std::size_t y) { ok = ok and s.test (d.meet (x, y)); });
    });
    return ok;
  }

  bool is_proper (const DLattice& d, const FilterOrIdeal& s) {
    return s.kind == SetKind::filter ? not s.members.test (d.bottom ())
                                     : not s.members.test (d.top ());
  }

  bool is_prime (const DLattice& d, const FilterOrIdeal& s) {
    const bool filter = s.kind == SetKind::filter;
    if (filter ? not is_filter (d, s.members) : not is_ideal (d, s.members))
      return false;
    if (not is_proper (d, s))
      return false;
    // Filter: x v y in F forces x or y in F. Ideal: x ^ y in I likewise.
    const auto outside = ~s.members;
    bool ok = true;
    for_each_member (outside, [&] (std::size_t x) {
      for_each_member (outside, [&] (std::size_t y) {
        ok = ok and not s.members.test (filter ? d.join (x, y) : d.meet (x, y));
      });
    });
    return ok;
  }

  ElementSet ideal_generated (const DLattice& d, const ElementSet& s) {
    return join_closed_downset_extend (d, s);
  }

  ElementSet filter_generated (const DLattice& d, const ElementSet& s) {
    Index m = d.top ();
    for_each_member (s, [&] (std::size_t x) { m = d.meet (m, x); });
    return d.up (m);
  }

  std::vector<FilterOrIdeal> enumerate_ideals (const DLattice& d) {
    // Backtracking over downsets along a linear extension of the lattice
    // order. An element below which everything is already in may be added;
    // an element that is the join of two chosen ones must be added.
    const auto n = d.size ();
    std::vector<std::size_t> order (n);
    for (std::size_t i = 0; i < n; ++i)
      order[i] = i;
    std::stable_sort (order.begin (), order.end (), [&] (std::size_t a, std::size_t b) {
      return d.down (a).count () < d.down (b).count ();
    });

    std::vector<ElementSet> found;
    ElementSet current (n);
    auto forced = [&] (std::size_t x) {
      bool hit = false;
      for_each_member (d.down (x), [&] (std::size_t a) {
        if (hit or not current.test (a))
          return;
        for_each_member (d.down (x), [&] (std::size_t b) {
          hit = hit or (current.test (b) and d.join (a, b) == x);
        });
      });
      return hit;
    };

    auto rec = [&] (auto& self, std::size_t depth) -> void {
      if (depth == n) {
        found.push_back (current);
        return;
      }
      const auto x = order[depth];
      auto strictly_below = d.down (x);
      strictly_below.reset (x);
      const bool may_add = strictly_below.is_subset_of (current);
      const bool must_add = x == d.bottom () or forced (x);
      if (not must_add)
        self (self, depth + 1);
      if (may_add) {
        current.set (x);
        self (self, depth + 1);
        current.reset (x);
      }
    };
    rec (rec, 0);

    std::sort (found.begin (), found.end ());
    std::vector<FilterOrIdeal> out;
    out.reserve (found.size ());
    for (auto& s : found)
      out.push_back ({SetKind::ideal, std::move (s)});
    return out;
  }

  std::vector<FilterOrIdeal> enumerate_filters (const DLattice& d) {
    auto ideals = enumerate_ideals (order_dual (d));
    for (auto& f : ideals)
      f.kind = SetKind::filter;
    return ideals;
  }

  std::vector<PrimeFilter> enumerate_prime_filters (const DLattice& d) {
    if (d.trivial ())
      throw domain_error ("the trivial lattice has no prime filters");
    std::vector<PrimeFilter> out;
    for (auto& f : enumerate_filters (d))
      if (is_prime (d, f))
        out.push_back ({f, {SetKind::ideal, ~f.members}});
    return out;
  }

  std::vector<FilterOrIdeal> enumerate_prime_ideals (const DLattice& d) {
    if (d.trivial ())
      throw domain_error ("the trivial lattice has no prime ideals");
    std::vector<FilterOrIdeal> out;
    for (auto& i : enumerate_ideals (d))
      if (is_prime (d, i))
        out.push_back (i);
    return out;
  }

  namespace {
    std::vector<FilterOrIdeal> maximal_among_proper (const DLattice& d,
                                                     std::vector<FilterOrIdeal> all) {
      std::vector<FilterOrIdeal> proper;
      for (auto& s : all)
        if (is_proper (d, s))
          proper.push_back (std::move (s));
      std::vector<FilterOrIdeal> out;
      for (const auto& s : proper) {
        bool maximal = true;
        for (const auto& t : proper)
          if (t.members != s.members and s.members.is_subset_of (t.members))
            maximal = false;
        if (maximal)
          out.push_back (s);
      }
      return out;
    }
  }

  std::vector<FilterOrIdeal> maximal_ideals (const DLattice& d) {
    if (d.trivial ())
      throw domain_error ("the trivial lattice has no proper ideals");
    auto out = maximal_among_proper (d, enumerate_ideals (d));
    for (const auto& m : out) {
      auto outside = ~m.members;
      for_each_member (outside, [&] (std::size_t a) {
        auto bigger = m.members;
        bigger.set (a);
        if (not ideal_generated (d, bigger).test (d.top ()))
          throw std::logic_error ("maximal ideal check failed at element " + str (a));
      });
    }
    return out;
  }

  std::vector<FilterOrIdeal> maximal_filters (const DLattice& d) {
    if (d.trivial ())
      throw domain_error ("the trivial lattice has no proper filters");
    auto out = maximal_among_proper (d, enumerate_filters (d));
    for (const auto& m : out) {
      auto outside = ~m.members;
      for_each_member (outside, [&] (std::size_t a) {
        auto bigger = m.members;
        bigger.set (a);
        if (not filter_generated (d, bigger).test (d.bottom ()))
          throw std::logic_error ("maximal filter check failed at element " + str (a));
      });
    }
    return out;
  }

  FilterOrIdeal pit_witness (const DLattice& d, const FilterOrIdeal& f, const FilterOrIdeal& i) {
    if (f.kind != SetKind::filter or not is_filter (d, f.members))
      throw precondition_error ("first argument is not a filter");
    if (i.kind != SetKind::ideal or not is_ideal (d, i.members))
      throw precondition_error ("second argument is not an ideal");
    if ((f.members & i.members).any ())
      throw precondition_error ("filter and ideal intersect at element " +
                                str ((f.members & i.members).find_first ()));
    for (auto& p : enumerate_prime_ideals (d))
      if (i.members.is_subset_of (p.members) and not (p.members & f.members).any ())
        return p;
    throw std::logic_error ("no prime ideal separates the filter from the ideal");
  }

  // ---- Ideal lattice --------------------------------------------------------

  IdealLattice ideal_lattice (const DLattice& d, std::size_t max_lattice) {
    auto ideals = enumerate_ideals (d);
    const auto n = ideals.size ();
    check_lattice_size (n, max_lattice);
    std::map<ElementSet, Index> index;
    std::vector<ElementSet> sets;
    sets.reserve (n);
    for (std::size_t k = 0; k < n; ++k) {
      index.emplace (ideals[k].members, static_cast<Index> (k));
      sets.push_back (ideals[k].members);
    }
    std::vector<Index> meet (n * n), join (n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        meet[a * n + b] = meet[b * n + a] = index.at (sets[a] & sets[b]);
        join[a * n + b] = join[b * n + a] = index.at (ideal_generated (d, sets[a] | sets[b]));
      }
    IdealLattice out {DLattice::from_tables_unchecked (n, std::move (meet), std::move (join)),
                      std::move (sets), {}, false};
    out.embedding.reserve (d.size ());
    for (std::size_t a = 0; a < d.size (); ++a)
      out.embedding.push_back (index.at (d.down (a)));
    out.embedding_verified = is_lattice_embedding (d, out.lattice, out.embedding);
    return out;
  }

  ClmaxReport clmax_pullback (const DLattice& d) {
    if (d.trivial ())
      throw domain_error ("the trivial lattice has no maximal ideals");
    ClmaxReport report {ideal_lattice (d), {}, true};
    const auto& id = report.ideals;
    const auto d_maximal = maximal_ideals (d);
    const auto d_ideals = enumerate_ideals (d);

    for (const auto& m : maximal_ideals (id.lattice)) {
      ClmaxTriple triple;
      triple.maximal_ideal = m.members;
      triple.pullback = ElementSet (d.size ());
      for (std::size_t a = 0; a < d.size (); ++a)
        if (m.members.test (id.embedding[a]))
          triple.pullback.set (a);
      triple.pullback_maximal =
        std::any_of (d_maximal.begin (), d_maximal.end (),
                     [&] (const FilterOrIdeal& x) { return x.members == triple.pullback; });

      triple.probes_ok = true;
      for (const auto& n : d_ideals) {
        if (n.members == triple.pullback or not triple.pullback.is_subset_of (n.members))
          continue;
        for_each_member (n.members - triple.pullback, [&] (std::size_t a) {
          std::optional<ClmaxProbe> probe;
          for_each_member (m.members, [&] (std::size_t k) {
            if (probe)
              return;
            for_each_member (id.ideals[k], [&] (std::size_t b) {
              if (not probe and d.join (a, b) == d.top ())
                probe = ClmaxProbe {n.members, static_cast<Index> (a), static_cast<Index> (k),
                                    static_cast<Index> (b)};
            });
          });
          if (probe and n.members.test (d.top ()))
            triple.probes.push_back (*probe);
          else
            triple.probes_ok = false;
        });
      }
      report.verdict = report.verdict and triple.pullback_maximal and triple.probes_ok;
      report.triples.push_back (std::move (triple));
    }
    report.verdict = report.verdict and id.embedding_verified and not report.triples.empty ();
    return report;
  }

  // ---- Boolean envelope -----------------------------------------------------

  BooleanEnvelope boolean_envelope (const DLattice& d, std::size_t max_lattice) {
    std::vector<PrimeFilter> points;
    if (not d.trivial ())
      points = enumerate_prime_filters (d);
    const auto k = points.size ();
    BooleanEnvelope out {DLattice::powerset (k, max_lattice), {}, false, true};
    out.embedding.reserve (d.size ());
    for (std::size_t a = 0; a < d.size (); ++a) {
      Index mask = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (points[i].filter.members.test (a))
          mask = static_cast<Index> (mask | (1u << i));
      out.embedding.push_back (mask);
    }
    if (d.trivial ()) {
      // Everything collapses onto the single element of the one-point envelope.
      out.embedding_verified = true;
      return out;
    }
    out.embedding_verified = is_lattice_embedding (d, out.envelope, out.embedding);
    for (const auto& p : enumerate_prime_ideals (out.envelope)) {
      FilterOrIdeal back {SetKind::ideal, ElementSet (d.size ())};
      for (std::size_t a = 0; a < d.size (); ++a)
        if (p.members.test (out.embedding[a]))
          back.members.set (a);
      out.prime_ideals_restrict = out.prime_ideals_restrict and is_prime (d, back);
    }
    return out;
  }

}
