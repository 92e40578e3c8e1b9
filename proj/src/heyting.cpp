#include "finlat/heyting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "finlat/errors.hpp"

namespace finlat {

  std::optional<std::array<Index, 3>> residuation_violation (const HeytingAlgebra& h) {
    const auto& d = h.base ();
    const auto n = d.size ();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto r = h.arrow (a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (d.leq (d.meet (a, c), b) != d.leq (c, r))
            return std::array<Index, 3> {static_cast<Index> (a), static_cast<Index> (b),
                                         static_cast<Index> (c)};
      }
    return std::nullopt;
  }

  std::optional<std::array<Index, 3>> coresiduation_violation (const HeytingAlgebra& h) {
    const auto& d = h.base ();
    const auto n = d.size ();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto r = h.coarrow (a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (d.leq (r, c) != d.leq (a, d.join (b, c)))
            return std::array<Index, 3> {static_cast<Index> (a), static_cast<Index> (b),
                                         static_cast<Index> (c)};
      }
    return std::nullopt;
  }

  HeytingAlgebra compute_arrow (const DLattice& d, bool with_coarrow) {
    const auto n = d.size ();
    std::vector<Index> arrow (n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Index r = d.bottom ();
        for (std::size_t c = 0; c < n; ++c)
          if (d.leq (d.meet (a, c), b))
            r = d.join (r, c);
        arrow[a * n + b] = r;
      }
    std::optional<std::vector<Index>> coarrow;
    if (with_coarrow) {
      coarrow.emplace (n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Index r = d.top ();
          for (std::size_t c = 0; c < n; ++c)
            if (d.leq (a, d.join (b, c)))
              r = d.meet (r, c);
          (*coarrow)[a * n + b] = r;
        }
    }
    HeytingAlgebra h (d, std::move (arrow), std::move (coarrow));
    if (auto v = residuation_violation (h))
      throw input_error ("residuation fails at (" + std::to_string ((*v)[0]) + ", " +
                         std::to_string ((*v)[1]) + ", " + std::to_string ((*v)[2]) +
                         "); the lattice is not distributive");
    if (with_coarrow)
      if (auto v = coresiduation_violation (h))
        throw input_error ("co-residuation fails at (" + std::to_string ((*v)[0]) + ", " +
                           std::to_string ((*v)[1]) + ", " + std::to_string ((*v)[2]) + ")");
    return h;
  }

  DualArrows dual_arrow_formula (const Poset& p, const ElementSet& u, const ElementSet& v) {
    if (not is_upset (p, u) or not is_upset (p, v))
      throw input_error ("dual arrow formulas need upsets");
    return {~down_closure (p, u - v), up_closure (p, v - u)};
  }

  std::size_t dual_arrow_mismatches (const Poset& p) {
    const auto up = from_upsets (p);
    const auto h = compute_arrow (up.lattice, true);
    const auto n = up.upsets.size ();
    std::size_t bad = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto f = dual_arrow_formula (p, up.upsets[a], up.upsets[b]);
        if (f.implication != up.upsets[h.arrow (a, b)] or
            f.coimplication != up.upsets[h.coarrow (b, a)])
          ++bad;
      }
    return bad;
  }

  Booleanization booleanization (const HeytingAlgebra& h) {
    const auto& d = h.base ();
    const auto n = d.size ();
    std::vector<Index> regular;
    std::vector<std::size_t> position (n, n);
    for (std::size_t a = 0; a < n; ++a)
      if (h.neg (h.neg (a)) == a) {
        position[a] = regular.size ();
        regular.push_back (static_cast<Index> (a));
      }
    const auto k = regular.size ();
    std::vector<Index> meet (k * k), join (k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const auto m = position[d.meet (regular[i], regular[j])];
        const auto s = position[h.neg (h.neg (d.join (regular[i], regular[j])))];
        if (m == n or s == n)
          throw std::logic_error ("regular elements are not closed under the Boolean operations");
        meet[i * k + j] = static_cast<Index> (m);
        join[i * k + j] = static_cast<Index> (s);
      }

    Booleanization out {DLattice::from_tables_unchecked (k, std::move (meet), std::move (join)),
                        regular, false, {}};
    out.is_boolean = finlat::is_boolean (out.boolean);

    auto& fb = out.filters;
    if (d.trivial ()) {
      fb.bijective = true;
      fb.upward_closure_inverts = true;
      return out;
    }
    fb.heyting_filters = maximal_filters (d);
    fb.boolean_filters = maximal_filters (out.boolean);

    auto locate = [] (const std::vector<FilterOrIdeal>& list, const ElementSet& s) {
      auto it = std::find_if (list.begin (), list.end (),
                              [&] (const FilterOrIdeal& f) { return f.members == s; });
      return static_cast<std::size_t> (it - list.begin ());
    };

    for (const auto& f : fb.heyting_filters) {
      ElementSet trace (k);
      for (std::size_t i = 0; i < k; ++i)
        if (f.members.test (regular[i]))
          trace.set (i);
      fb.forward.push_back (locate (fb.boolean_filters, filter_generated (out.boolean, trace)));
    }
    std::vector<std::size_t> closure_backward;
    for (const auto& g : fb.boolean_filters) {
      ElementSet preimage (n), closure (n);
      for (std::size_t a = 0; a < n; ++a)
        if (g.members.test (position[h.neg (h.neg (a))]))
          preimage.set (a);
      for_each_member (g.members, [&] (std::size_t i) { closure |= d.up (regular[i]); });
      fb.backward.push_back (locate (fb.heyting_filters, preimage));
      closure_backward.push_back (locate (fb.heyting_filters, closure));
    }

    const auto nh = fb.heyting_filters.size (), nb = fb.boolean_filters.size ();
    fb.bijective = nh == nb;
    for (std::size_t i = 0; i < nh and fb.bijective; ++i)
      fb.bijective = fb.forward[i] < nb and fb.backward[fb.forward[i]] == i;
    for (std::size_t j = 0; j < nb and fb.bijective; ++j)
      fb.bijective = fb.backward[j] < nh and fb.forward[fb.backward[j]] == j;
    fb.upward_closure_inverts = fb.bijective and closure_backward == fb.backward;
    return out;
  }

}
