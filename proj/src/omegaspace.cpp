#include "finlat/omegaspace.hpp"

#include <bit>
#include <string>

#include "finlat/errors.hpp"

namespace finlat::omega {

  namespace {
    constexpr std::uint64_t below (std::size_t n) { return n >= 64 ? ~std::uint64_t {0} : (std::uint64_t {1} << n) - 1; }

    // Least finite index in the part, or 64 when the finite part is empty
    // (a tail whose exceptions cover 0..63 still starts at 64).
    std::size_t least_index (const ChainPart& p) {
      if (p.tail)
        return static_cast<std::size_t> (std::countr_one (p.finite));
      return p.finite ? static_cast<std::size_t> (std::countr_zero (p.finite)) : 64;
    }

    bool has_finite (const ChainPart& p) { return not p.empty_finite (); }

    ChainPart from_index (std::size_t n) { return {below (n), true, false}; }

    ChainPart part_union (const ChainPart& p, const ChainPart& q) {
      ChainPart r;
      r.omega = p.omega or q.omega;
      r.tail = p.tail or q.tail;
      if (p.tail and q.tail)
        r.finite = p.finite & q.finite;
      else if (p.tail)
        r.finite = p.finite & ~q.finite;
      else if (q.tail)
        r.finite = q.finite & ~p.finite;
      else
        r.finite = p.finite | q.finite;
      return r;
    }

    ChainPart part_complement (const ChainPart& p) { return {p.finite, not p.tail, not p.omega}; }

    ChainPart part_intersection (const ChainPart& p, const ChainPart& q) {
      return part_complement (part_union (part_complement (p), part_complement (q)));
    }

    std::string part_string (const ChainPart& p, char name) {
      std::string out;
      auto add = [&] (const std::string& s) {
        if (not out.empty ())
          out += ",";
        out += s;
      };
      const std::string prefix (1, name);
      if (not p.tail) {
        for (std::size_t n = 0; n < 64; ++n)
          if (p.finite >> n & 1u)
            add (prefix + "_" + std::to_string (n));
      } else if (p.finite == 0) {
        add (prefix + "_n for all n");
      } else {
        std::string ex;
        for (std::size_t n = 0; n < 64; ++n)
          if (p.finite >> n & 1u)
            ex += (ex.empty () ? "" : " ") + std::to_string (n);
        add (prefix + "_n for n not in {" + ex + "}");
      }
      if (p.omega)
        add (prefix + "_omega");
      return out;
    }

    // Point ids in a truncation: a_i, b_i, a_omega, b_omega.
    struct Point {
      bool is_a;
      bool omega;
      std::size_t index;
    };

    Point point_of (std::size_t i, std::size_t k) {
      if (i < k)
        return {true, false, i};
      if (i < 2 * k)
        return {false, false, i - k};
      return {i == 2 * k, true, 0};
    }

    bool point_leq (const Point& p, const Point& q) {
      if (p.is_a == q.is_a and p.omega == q.omega and p.index == q.index)
        return true;
      if (p.omega)
        return p.is_a ? (q.is_a and not q.omega) : true;
      if (q.omega)
        return false;
      if (p.is_a)
        return q.is_a and p.index >= q.index;
      return p.index >= q.index;
    }
  }

  TailSet TailSet::point_a (std::size_t n) {
    if (n >= 64)
      throw capacity_error ("finite indices are limited to 0..63");
    return {{std::uint64_t {1} << n, false, false}, {}};
  }

  TailSet TailSet::point_b (std::size_t n) {
    if (n >= 64)
      throw capacity_error ("finite indices are limited to 0..63");
    return {{}, {std::uint64_t {1} << n, false, false}};
  }

  TailSet set_union (const TailSet& u, const TailSet& v) { return {part_union (u.a, v.a), part_union (u.b, v.b)}; }

  TailSet set_intersection (const TailSet& u, const TailSet& v) {
    return {part_intersection (u.a, v.a), part_intersection (u.b, v.b)};
  }

  TailSet set_complement (const TailSet& u) { return {part_complement (u.a), part_complement (u.b)}; }

  TailSet set_difference (const TailSet& u, const TailSet& v) { return set_intersection (u, set_complement (v)); }

  bool is_subset (const TailSet& u, const TailSet& v) { return set_difference (u, v) == TailSet::empty (); }

  Topology classify (const TailSet& u) {
    Topology t;
    t.open = (not u.a.omega or u.a.tail) and (not u.b.omega or u.b.tail);
    t.closed = (not u.a.tail or u.a.omega) and (not u.b.tail or u.b.omega);
    t.clopen = t.open and t.closed;
    return t;
  }

  Topology classify_in (const TailSet& s, const TailSet& c) {
    if (not classify (c).closed)
      throw precondition_error ("subspace must be closed");
    if (not is_subset (s, c))
      throw input_error ("set is not inside the subspace");
    const auto outside = set_complement (c);
    Topology t;
    t.open = classify (set_union (s, outside)).open;
    t.closed = classify (set_union (set_difference (c, s), outside)).open;
    t.clopen = t.open and t.closed;
    return t;
  }

  TailSet down_closure_sym (const TailSet& u) {
    TailSet r;
    const bool any = has_finite (u.a) or u.a.omega or has_finite (u.b) or u.b.omega;
    if (has_finite (u.a)) {
      r.a = from_index (least_index (u.a));
      r.a.omega = true;
    }
    r.a.omega = r.a.omega or u.a.omega;
    std::size_t lb = 64;
    bool b_finite = false;
    if (has_finite (u.a)) {
      lb = least_index (u.a);
      b_finite = true;
    }
    if (has_finite (u.b)) {
      lb = std::min (lb, least_index (u.b));
      b_finite = true;
    }
    if (b_finite)
      r.b = from_index (lb);
    r.b.omega = any;
    return r;
  }

  TailSet up_closure_sym (const TailSet& u) {
    if (u.b.omega)
      return TailSet::full ();
    auto highest = [] (const ChainPart& p) -> long {
      return p.finite ? 63 - std::countl_zero (p.finite) : -1;
    };
    TailSet r;
    if (u.a.omega or u.a.tail or u.b.tail)
      r.a = {0, true, false};
    else {
      const auto top = std::max (highest (u.a), highest (u.b));
      r.a = {below (static_cast<std::size_t> (top + 1)), false, false};
    }
    r.a.omega = u.a.omega;
    if (u.b.tail)
      r.b = {0, true, false};
    else
      r.b = {below (static_cast<std::size_t> (highest (u.b) + 1)), false, false};
    return r;
  }

  std::string to_string (const TailSet& u) {
    auto a = part_string (u.a, 'a');
    auto b = part_string (u.b, 'b');
    if (not a.empty () and not b.empty ())
      a += ",";
    return "{" + a + b + "}";
  }

  std::size_t clopen_family_size (std::size_t k) {
    if (k > 12)
      throw capacity_error ("clopen family bound " + std::to_string (k) + " exceeds 12");
    const auto per_chain = std::size_t {2} << k;
    return per_chain * per_chain;
  }

  TailSet clopen_family_member (std::size_t k, std::size_t i) {
    const auto per_chain = std::size_t {2} << k;
    auto part = [&] (std::size_t j) {
      const bool limit = (j >> k) != 0;
      return ChainPart {j & below (k), limit, limit};
    };
    return {part (i % per_chain), part (i / per_chain)};
  }

  ExampleReport verify_example (std::size_t k) {
    ExampleReport r;
    r.bound = k;
    r.family_size = clopen_family_size (k);
    for (std::size_t i = 0; i < r.family_size; ++i) {
      const auto u = clopen_family_member (k, i);
      if (not classify (down_closure_sym (u)).clopen)
        ++r.down_not_clopen;
      if (not classify (up_closure_sym (u)).clopen)
        ++r.up_not_clopen;
    }
    r.esakia = r.down_not_clopen == 0;

    r.c = set_union (down_closure_sym (TailSet::point_b (0)), TailSet::a_omega ());
    r.c_topology = classify (r.c);
    r.c_closed_not_open = r.c_topology.closed and not r.c_topology.open;

    r.witness = {{0, true, true}, {}};
    r.a_omega_clopen_in_c = classify (r.witness).clopen and
                            set_intersection (r.witness, r.c) == TailSet::a_omega () and
                            classify_in (TailSet::a_omega (), r.c).clopen;

    r.down_a_omega = set_intersection (down_closure_sym (TailSet::a_omega ()), r.c);
    r.down_a_omega_in_c = classify_in (r.down_a_omega, r.c);
    // Open b-parts around b_omega, with exceptions below k.
    for (std::size_t mask = 0; mask < (std::size_t {1} << k); ++mask)
      for (bool tail : {false, true}) {
        const ChainPart part {mask, tail, true};
        if (not classify ({{}, part}).open)
          continue;
        ++r.neighbourhoods_checked;
        bool has_b = false;
        for (std::size_t n = 0; n <= k; ++n)
          has_b = has_b or part.contains (n);
        if (not has_b)
          ++r.neighbourhoods_without_b;
      }
    r.down_not_clopen_in_c = r.down_a_omega == set_union (TailSet::a_omega (), TailSet::b_omega ()) and
                             not r.down_a_omega_in_c.clopen and r.neighbourhoods_checked > 0 and
                             r.neighbourhoods_without_b == 0;
    return r;
  }

  Poset truncation (std::size_t k) {
    const auto n = 2 * k + 2;
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (point_leq (point_of (i, k), point_of (j, k)))
          rows[i].set (j);
    return Poset (std::move (rows));
  }

  ElementSet truncate (const TailSet& u, std::size_t k) {
    if (k > 64)
      throw capacity_error ("truncation bound exceeds 64");
    ElementSet s (2 * k + 2);
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = u.a.contains (i);
      s[k + i] = u.b.contains (i);
    }
    s[2 * k] = u.a.omega;
    s[2 * k + 1] = u.b.omega;
    return s;
  }

  TailSet lift (const ElementSet& s, std::size_t k) {
    if (s.size () != 2 * k + 2)
      throw input_error ("set does not belong to the truncation at " + std::to_string (k));
    TailSet u;
    for (std::size_t i = 0; i < k; ++i) {
      if (s[i])
        u.a.finite |= std::uint64_t {1} << i;
      if (s[k + i])
        u.b.finite |= std::uint64_t {1} << i;
    }
    u.a.omega = s[2 * k];
    u.b.omega = s[2 * k + 1];
    return u;
  }

}
