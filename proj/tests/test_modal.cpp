#include <gtest/gtest.h>

#include "finlat/corpus.hpp"
#include "finlat/errors.hpp"
#include "finlat/modal.hpp"
#include "oracles.hpp"

using namespace finlat;

namespace {

  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

  RelSpace rel (std::size_t n, Pairs pairs) { return RelSpace::from_pairs (n, pairs); }

  const RelSpace two_chain = rel (2, {{0, 1}});
  const RelSpace reflexive_two_chain = rel (2, {{0, 0}, {0, 1}, {1, 1}});
  const RelSpace three_cycle = rel (3, {{0, 1}, {1, 2}, {2, 0}});

  RelSpace from_matrix (const oracle::Matrix& m) {
    std::vector<WorldSet> rows (m.size ());
    for (std::size_t x = 0; x < m.size (); ++x)
      for (std::size_t y = 0; y < m.size (); ++y)
        if (m[x][y])
          rows[x] |= WorldSet {1} << y;
    return RelSpace (rows);
  }

  std::vector<RelSpace> all_relations (std::size_t max_worlds) {
    std::vector<RelSpace> out;
    for (std::size_t n = 1; n <= max_worlds; ++n)
      for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code)
        out.push_back (RelSpace::from_code (n, code));
    return out;
  }

}

TEST (Modal, AlgebraFromSpaceExamples) {
  EXPECT_EQ (algebra_from_space (RelSpace::empty (1)).box (0), 1);
  EXPECT_EQ (algebra_from_space (two_chain).box (0b10), 0b11);
  EXPECT_EQ (algebra_from_space (two_chain).box (0b01), 0b10);
  const auto id = algebra_from_space (RelSpace::identity (3));
  for (Index a = 0; a < 8; ++a)
    EXPECT_EQ (id.box (a), a);
}

TEST (Modal, SpaceFromAlgebraExamples) {
  const auto jt = space_from_algebra (algebra_from_space (two_chain));
  EXPECT_EQ (jt.space, two_chain);
  EXPECT_TRUE (jt.iso and jt.diamond_form_agrees);

  const auto b = DLattice::powerset (2);
  std::vector<Index> identity {0, 1, 2, 3};
  EXPECT_EQ (space_from_algebra (ModalAlgebra (b, identity)).space, RelSpace::identity (2));
  std::vector<Index> top (4, 3);
  EXPECT_EQ (space_from_algebra (ModalAlgebra (b, top)).space, RelSpace::empty (2));
}

TEST (Modal, ModalAlgebraValidation) {
  EXPECT_THROW (ModalAlgebra (DLattice::chain (3), {0, 1, 2}), input_error);
  // box(1) must be 1.
  EXPECT_THROW (ModalAlgebra (DLattice::powerset (1), {0, 0}), input_error);
  // box({0}) ^ box({1}) = box(0) fails.
  EXPECT_THROW (ModalAlgebra (DLattice::powerset (2), {0, 3, 3, 3}), input_error);
  EXPECT_THROW (space_from_algebra (ModalAlgebra (DLattice::powerset (0), {0})), domain_error);
}

TEST (Modal, ClassExamples) {
  const auto id = class_checks (RelSpace::identity (3));
  EXPECT_TRUE (id.s4);
  EXPECT_EQ (id.least_transitivity, 0u);

  const auto cycle = class_checks (three_cycle);
  EXPECT_FALSE (cycle.k4);
  EXPECT_EQ (cycle.least_transitivity, 2u);
  EXPECT_EQ (star_closure (three_cycle).rows (), std::vector<WorldSet> (3, 0b111));

  const auto tree = class_checks (rel (3, {{0, 1}, {0, 2}}));
  EXPECT_TRUE (tree.k4);
  EXPECT_FALSE (tree.s4);
}

TEST (Modal, StarClosureExamples) {
  EXPECT_EQ (star_closure (RelSpace::empty (3)), RelSpace::identity (3));
  EXPECT_EQ (star_closure (reflexive_two_chain), reflexive_two_chain);
}

TEST (Modal, ReflexivizeExamples) {
  EXPECT_EQ (reflexivize (RelSpace::identity (2)).space, RelSpace::identity (2));
  const auto r = reflexivize (two_chain);
  EXPECT_EQ (r.space, reflexive_two_chain);
  EXPECT_EQ (qmax (two_chain, 0b11), 0b10u);
  EXPECT_EQ (qmax (r.space, 0b11), 0b10u);
  EXPECT_TRUE (r.qmax_preserved);

  const auto order = rel (4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto ra = reflexivize (algebra_from_space (order));
  EXPECT_TRUE (ra.s4_verified);
  EXPECT_TRUE (class_checks (ra.algebra).s4);
  EXPECT_EQ (reflexivize (order).space, star_closure (order));
}

TEST (Modal, ReflexivizeNonK4) {
  EXPECT_THROW (reflexivize (three_cycle), precondition_error);
  EXPECT_THROW (reflexivize (algebra_from_space (three_cycle)), precondition_error);
  const auto lenient = reflexivize (three_cycle, ClaimMode::lenient);
  EXPECT_FALSE (lenient.input_k4);
  EXPECT_TRUE (is_reflexive (lenient.space));
}

TEST (Modal, QmaxExamples) {
  EXPECT_EQ (qmax (RelSpace::identity (1), 1), 1u);
  EXPECT_EQ (qmax (rel (2, {{0, 1}, {1, 0}}), 0b11), 0b11u);
  EXPECT_EQ (qmax (reflexive_two_chain, 0b11), 0b10u);
  EXPECT_EQ (qmax (reflexive_two_chain, 0b01), 0b01u);
  EXPECT_EQ (eqmax (three_cycle, 0b111), 0b111u);
}

TEST (Modal, RelativizeExamples) {
  const auto m = algebra_from_space (two_chain);
  const auto whole = relativize (m, 0b11);
  EXPECT_EQ (whole.algebra.box_table (), m.box_table ());

  const auto y = relativize (m, 0b10);
  EXPECT_EQ (y.algebra.size (), 2u);
  EXPECT_EQ (y.elements, (std::vector<Index> {0, 0b10}));
  // y has no successors, so box of bottom is the top of the relativization.
  EXPECT_EQ (y.algebra.box (0), 1);

  EXPECT_THROW (relativize (m, 0), domain_error);
  EXPECT_THROW (relativize_dual_check (two_chain, 0), domain_error);
}

TEST (Modal, FamaxExamples) {
  const auto b2 = DLattice::powerset (2);
  const auto from_top = famax_quotient (b2, make_set (4, {3}));
  EXPECT_TRUE (from_top.is_ultrafilter and from_top.extends_filter);
  EXPECT_TRUE (from_top.pullback == make_set (4, {1, 3}) or from_top.pullback == make_set (4, {2, 3}));

  const auto ultra = make_set (4, {2, 3});
  EXPECT_EQ (famax_quotient (b2, ultra).pullback, ultra);
  EXPECT_EQ (famax_quotient (b2, ultra).quotient.lattice.size (), 2u);

  const auto b3 = DLattice::powerset (3);
  const auto r = famax_quotient (b3, b3.up (0b110));
  EXPECT_TRUE (r.is_ultrafilter and r.extends_filter);

  EXPECT_THROW (famax_quotient (b2, full_set (4)), precondition_error);
  EXPECT_THROW (famax_quotient (DLattice::chain (3), make_set (3, {2})), domain_error);
}

TEST (Modal, ClusterQuotientExamples) {
  const auto order = rel (3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}});
  const auto po = cluster_quotient (order);
  EXPECT_EQ (po.poset.size (), 3u);
  EXPECT_TRUE (po.upset_iso and po.fixpoints_heyting and po.qmax_matches_max);
  EXPECT_EQ (po.fixpoints.size (), oracle::upsets (po.poset).size ());

  const auto cluster = cluster_quotient (RelSpace (std::vector<WorldSet> (3, 0b111)));
  EXPECT_EQ (cluster.poset.size (), 1u);
  EXPECT_EQ (cluster.fixpoints, (std::vector<Index> {0, 0b111}));

  const auto below = cluster_quotient (rel (3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 2}}));
  EXPECT_EQ (below.poset, Poset::chain (2));
  EXPECT_EQ (below.class_of, (std::vector<std::size_t> {0, 0, 1}));

  EXPECT_THROW (cluster_quotient (two_chain), precondition_error);
}

TEST (ModalProperties, BoxMatchesPointwiseDefinition) {
  for (const auto& r : all_relations (3)) {
    const auto m = algebra_from_space (r);
    for (Index u = 0; u < m.size (); ++u) {
      EXPECT_EQ (m.box (u), oracle::box (r, u));
      EXPECT_EQ (r.box (u), oracle::box (r, u));
    }
    EXPECT_TRUE (box_preserves_meets (m));
    EXPECT_TRUE (diamond_preserves_joins (m));
  }
}

TEST (ModalProperties, RelationAlgebraAgainstMatrices) {
  for (const auto& r : corpus::relations (corpus::default_seed, 100, 5)) {
    const auto m = oracle::matrix (r);
    for (std::size_t k = 0; k <= 4; ++k)
      EXPECT_EQ (relation_power (r, k), from_matrix (oracle::power (m, k)));
    EXPECT_EQ (star_closure (r), from_matrix (oracle::star (m)));
    EXPECT_EQ (compose (r, r), from_matrix (oracle::product (m, m)));
    EXPECT_EQ (converse (converse (r)), r);
  }
}

TEST (ModalProperties, RoundTrips) {
  for (const auto& r : all_relations (3))
    EXPECT_TRUE (round_trip_space (r).iso);
  for (const auto& m : corpus::modal_algebras (corpus::default_seed, 60, 4)) {
    const auto jt = space_from_algebra (m);
    EXPECT_TRUE (jt.iso);
    EXPECT_TRUE (jt.diamond_form_agrees);
    EXPECT_TRUE (box_preserves_meets (m) and diamond_preserves_joins (m));
    // The representation carries box to box_R.
    const auto back = algebra_from_space (jt.space);
    for (Index a = 0; a < m.size (); ++a)
      EXPECT_EQ (jt.representation[m.box (a)], back.box (jt.representation[a]));
  }
}

TEST (ModalProperties, ClassesAgreeAcrossDuality) {
  for (const auto& r : all_relations (3)) {
    const auto space = class_checks (r);
    const auto algebra = class_checks (algebra_from_space (r));
    EXPECT_EQ (space.k4, algebra.k4);
    EXPECT_EQ (space.s4, algebra.s4);
    EXPECT_EQ (space.n_transitive, algebra.n_transitive);
    EXPECT_EQ (space.k4, is_transitive (r));
    EXPECT_EQ (space.s4, is_transitive (r) and is_reflexive (r));
  }
}

TEST (ModalProperties, QuasiMaximality) {
  for (const auto& r : corpus::relations (corpus::default_seed, 100, 5)) {
    const auto m = oracle::matrix (r);
    for (WorldSet c = 1; c <= r.worlds (); ++c) {
      EXPECT_EQ (qmax (r, c), oracle::quasi_max (m, c));
      const auto e = eqmax (r, c);
      EXPECT_EQ (e, oracle::quasi_max (oracle::star (oracle::restrict_to (m, c)), c));
      EXPECT_NE (e, 0u);
    }
  }
  for (const auto& r : corpus::transitive_relations (corpus::default_seed, 60, 5)) {
    const auto plus = reflexivize (r);
    for (WorldSet c = 1; c <= r.worlds (); ++c)
      EXPECT_EQ (qmax (r, c), qmax (plus.space, c));
  }
}

TEST (ModalProperties, WeakTransitivityStep) {
  for (const auto& r : all_relations (3))
    for (WorldSet c = 1; c <= r.worlds (); ++c) {
      const auto w = wtmax_check (r, c);
      EXPECT_TRUE (w.agrees);
      if (w.applicable) {
        const auto m = oracle::restrict_to (oracle::matrix (r), c);
        EXPECT_EQ (w.qmax_power, oracle::quasi_max (oracle::power (m, w.power), c));
        EXPECT_EQ (w.eqmax, w.qmax_power);
      }
    }
}

TEST (ModalProperties, Relativization) {
  for (const auto& r : corpus::relations (corpus::default_seed, 40, 4))
    for (WorldSet c = 1; c <= r.worlds (); ++c) {
      const auto check = relativize_dual_check (r, c);
      EXPECT_TRUE (check.iso);
      EXPECT_TRUE (check.relativized.k4_inherited);
      if (is_transitive (r))
        EXPECT_TRUE (class_checks (check.relativized.algebra).k4);
    }
}

TEST (ModalProperties, FamaxOnBooleans) {
  for (const auto& b : corpus::booleans (corpus::default_seed, 4))
    for (const auto& f : enumerate_filters (b)) {
      if (f.members.test (b.bottom ()))
        continue;
      const auto r = famax_quotient (b, f.members);
      EXPECT_TRUE (r.is_ultrafilter);
      EXPECT_TRUE (r.extends_filter);
      EXPECT_TRUE (f.members.is_subset_of (r.pullback));
    }
}

TEST (ModalProperties, ClusterQuotients) {
  for (const auto& r : corpus::relations (corpus::default_seed, 100, 5)) {
    const auto s = star_closure (r);
    const auto q = cluster_quotient (s);
    EXPECT_TRUE (q.upset_iso);
    EXPECT_TRUE (q.fixpoints_heyting);
    EXPECT_TRUE (q.qmax_matches_max);
    for (auto u : q.fixpoints)
      EXPECT_EQ (oracle::box (s, u), u);
  }
}
