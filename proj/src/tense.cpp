#include "finlat/tense.hpp"

#include <algorithm>
#include <string>

#include "finlat/errors.hpp"

namespace finlat {

  std::optional<Index> connecting_axiom_violation (const ModalAlgebra& future, const ModalAlgebra& past) {
    const auto& d = future.base ();
    for (std::size_t a = 0; a < d.size (); ++a)
      if (not d.leq (a, future.box (past.diamond (a))) or not d.leq (a, past.box (future.diamond (a))))
        return static_cast<Index> (a);
    return std::nullopt;
  }

  TenseAlgebra::TenseAlgebra (DLattice base, std::vector<Index> box_future, std::vector<Index> box_past)
    : future_ (base, std::move (box_future)), past_ (std::move (base), std::move (box_past)) {
    if (auto a = connecting_axiom_violation (future_, past_))
      throw input_error ("connecting axiom fails at element " + std::to_string (*a));
  }

  TenseAlgebra tense_from_space (const RelSpace& s, std::size_t max_lattice) {
    auto future = algebra_from_space (s, max_lattice);
    const auto past = converse (s);
    std::vector<Index> box_past (future.size ());
    for (std::size_t u = 0; u < future.size (); ++u)
      box_past[u] = static_cast<Index> (past.box (u));
    return TenseAlgebra (future.base (), future.box_table (), std::move (box_past));
  }

  bool is_s4t (const TenseAlgebra& t) { return class_checks (t.future (), 0).s4; }

  BiHeyting biheyting_fixpoints (const TenseAlgebra& t) {
    if (not is_s4t (t))
      throw precondition_error ("fixpoint algebra needs an S4 future box");
    std::vector<Index> fixpoints;
    for (std::size_t a = 0; a < t.size (); ++a)
      if (t.future ().box (a) == a)
        fixpoints.push_back (static_cast<Index> (a));
    return {compute_arrow (sublattice (t.base (), fixpoints), true), std::move (fixpoints)};
  }

  BiHeytingDualCheck biheyting_dual_check (const RelSpace& s) {
    const auto bh = biheyting_fixpoints (tense_from_space (s));
    const auto cq = cluster_quotient (s);
    const auto& h = bh.algebra;
    const auto k = cq.poset.size ();
    const auto up = from_upsets (cq.poset);

    BiHeytingDualCheck out;
    std::vector<ElementSet> image;
    std::vector<Index> map;
    for (auto u : bh.fixpoints) {
      ElementSet classes (k);
      for (std::size_t x = 0; x < s.size (); ++x)
        if (u >> x & 1u)
          classes.set (cq.class_of[x]);
      auto idx = up.index_of (classes);
      if (not idx)
        return out;
      image.push_back (std::move (classes));
      map.push_back (*idx);
    }
    out.lattice_iso = up.upsets.size () == bh.fixpoints.size () and
                      is_lattice_embedding (h.base (), up.lattice, map);

    for (std::size_t a = 0; a < h.size (); ++a)
      for (std::size_t b = 0; b < h.size (); ++b) {
        const auto f = dual_arrow_formula (cq.poset, image[a], image[b]);
        if (image[h.arrow (a, b)] != f.implication or image[h.coarrow (b, a)] != f.coimplication)
          ++out.formula_mismatches;
      }
    return out;
  }

  std::vector<std::vector<Index>> conjugate_candidates (const RelSpace& s) {
    const auto n = s.size ();
    if (n > 4)
      throw capacity_error ("conjugate search is limited to 4 worlds");
    const auto future = algebra_from_space (s);
    const auto full = s.worlds ();
    const auto values = std::size_t {1} << n;

    std::vector<std::vector<Index>> out;
    std::vector<WorldSet> coatom_value (n, 0);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i)
      combos *= values;
    for (std::size_t code = 0; code < combos; ++code) {
      auto rest = code;
      for (std::size_t i = 0; i < n; ++i) {
        coatom_value[i] = rest % values;
        rest /= values;
      }
      // box U is the meet of the values at the coatoms above U.
      std::vector<Index> box (values);
      for (WorldSet u = 0; u < values; ++u) {
        WorldSet v = full;
        for (std::size_t i = 0; i < n; ++i)
          if (not (u >> i & 1u))
            v &= coatom_value[i];
        box[u] = static_cast<Index> (v);
      }
      const ModalAlgebra past (future.base (), box);
      if (not connecting_axiom_violation (future, past))
        out.push_back (std::move (box));
    }
    return out;
  }

}
