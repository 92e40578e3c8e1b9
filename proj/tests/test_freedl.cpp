#include <gtest/gtest.h>

#include "finlat/corpus.hpp"
#include "finlat/errors.hpp"
#include "finlat/freedl.hpp"
#include "finlat/heyting.hpp"
#include "oracles.hpp"

using namespace finlat;

namespace {

  constexpr GeneratorMask x = 1, y = 2, z = 4;

  AntichainTerm term (unsigned n, std::vector<GeneratorMask> meets) {
    return AntichainTerm::normalize (n, std::move (meets));
  }

  std::vector<AntichainTerm> random_terms (unsigned n, std::size_t count, std::uint64_t seed) {
    corpus::Rng rng (seed);
    std::uniform_int_distribution<GeneratorMask> mask (0, (1u << n) - 1);
    std::uniform_int_distribution<int> length (0, 4);
    std::vector<AntichainTerm> out;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<GeneratorMask> raw;
      for (int k = length (rng); k > 0; --k)
        raw.push_back (mask (rng));
      out.push_back (term (n, raw));
    }
    return out;
  }

  // A single meet of generators below a single join, straight from the
  // truth tables.
  bool meet_below_join (unsigned n, GeneratorMask a, GeneratorMask b) {
    for (GeneratorMask v = 0; v < (1u << n); ++v)
      if ((v & a) == a and (v & b) == 0)
        return false;
    return true;
  }

}

TEST (FreeDL, NormalizeExamples) {
  EXPECT_EQ (term (2, {x, x | y}).meets (), (std::vector<GeneratorMask> {x}));
  EXPECT_TRUE (term (1, {0, x}).is_one ());
  EXPECT_EQ (term (2, {x}).meet (term (2, {y})).meets (), (std::vector<GeneratorMask> {x | y}));
  EXPECT_TRUE (AntichainTerm::zero (3).is_zero ());
  EXPECT_EQ (term (3, {x | y, z}).to_string (), "x0&x1 | x2");
  EXPECT_EQ (AntichainTerm::zero (2).to_string (), "0");
  EXPECT_EQ (AntichainTerm::one (2).to_string (), "1");
}

TEST (FreeDL, NormalizeErrors) {
  EXPECT_THROW (term (2, {z}), input_error);
  EXPECT_THROW (term (6, {x}), capacity_error);
  EXPECT_THROW (generate_free (6), capacity_error);
  EXPECT_THROW (implication_oracle (AntichainTerm::zero (5), AntichainTerm::zero (5)), capacity_error);
  EXPECT_THROW (implication_lemma (AntichainTerm::zero (2), AntichainTerm::zero (3)), input_error);
}

TEST (FreeDL, Sizes) {
  const std::vector<std::size_t> expected {2, 3, 6, 20, 168};
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_EQ (oracle::antichain_count (n), expected[n]);
    EXPECT_EQ (generate_free (n).lattice.size (), expected[n]);
  }
}

TEST (FreeDL, DecompositionExamples) {
  EXPECT_EQ (meet_irreducible_decomposition (term (2, {x | y})), (std::vector<GeneratorMask> {x, y}));
  EXPECT_EQ (meet_irreducible_decomposition (term (2, {x, y})), (std::vector<GeneratorMask> {x | y}));
  EXPECT_EQ (meet_irreducible_decomposition (term (2, {x})), (std::vector<GeneratorMask> {x}));
  EXPECT_TRUE (meet_irreducible_decomposition (AntichainTerm::one (2)).empty ());
  EXPECT_EQ (meet_irreducible_decomposition (AntichainTerm::zero (2)), (std::vector<GeneratorMask> {0}));
}

TEST (FreeDL, LemmaExamples) {
  EXPECT_TRUE (implication_lemma (term (3, {x | y}), term (3, {x, z})).is_one ());
  EXPECT_EQ (implication_lemma (term (2, {x}), term (2, {y})), term (2, {y}));
  EXPECT_TRUE (implication_lemma (AntichainTerm::zero (3), term (3, {y})).is_one ());
  EXPECT_TRUE (implication_oracle (term (2, {x}), term (2, {x})).is_one ());
  EXPECT_TRUE (implication_oracle (term (2, {x}), AntichainTerm::zero (2)).is_zero ());
  // (x v y) -> x is the largest r with r ^ y <= x, which is x itself.
  EXPECT_EQ (implication_oracle (term (2, {x, y}), term (2, {x})), term (2, {x}));
}

TEST (FreeDL, ZeroGenerators) {
  const auto f = generate_free (0);
  ASSERT_EQ (f.terms.size (), 2u);
  for (const auto& p : f.terms)
    for (const auto& q : f.terms)
      EXPECT_EQ (implication_lemma (p, q), implication_oracle (p, q));
  EXPECT_TRUE (implication_lemma (AntichainTerm::one (0), AntichainTerm::zero (0)).is_zero ());
}

TEST (FreeDL, DualIsCube) {
  EXPECT_EQ (dual_is_cube (1).dual, Poset::chain (2));
  const auto two = dual_is_cube (2);
  EXPECT_TRUE (two.iso);
  EXPECT_TRUE (find_isomorphism (two.dual, product (Poset::chain (2), Poset::chain (2))).has_value ());
  for (unsigned n = 0; n <= 4; ++n) {
    const auto c = dual_is_cube (n);
    EXPECT_TRUE (c.iso) << n;
    EXPECT_TRUE (is_order_isomorphism (c.dual, c.cube, c.map));
  }
}

TEST (FreeDLProperties, TermAlgebraLaws) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto f = generate_free (n);
    for (const auto& p : f.terms) {
      EXPECT_EQ (AntichainTerm::normalize (n, p.meets ()), p);
      EXPECT_EQ (AntichainTerm::from_truth_table (n, p.truth_table ()), p);
      for (const auto& q : f.terms) {
        EXPECT_EQ (p.join (q), q.join (p));
        EXPECT_EQ (p.meet (q), q.meet (p));
        EXPECT_EQ (p.meet (p.join (q)), p);
        EXPECT_EQ (p.leq (q), p.meet (q) == p);
        EXPECT_EQ (p.leq (q), (p.truth_table () & ~q.truth_table ()) == 0);
        for (const auto& r : f.terms)
          EXPECT_EQ (p.meet (q.join (r)), p.meet (q).join (p.meet (r)));
      }
    }
  }
  for (unsigned n = 4; n <= 5; ++n) {
    const auto terms = random_terms (n, 40, 7 + n);
    for (const auto& p : terms)
      for (const auto& q : terms) {
        EXPECT_EQ (p.meet (p.join (q)), p);
        EXPECT_EQ (p.join (p.meet (q)), p);
        EXPECT_EQ (p.join (q).truth_table (), p.truth_table () | q.truth_table ());
        EXPECT_EQ (p.meet (q).truth_table (), p.truth_table () & q.truth_table ());
        EXPECT_EQ (p.meet (q.join (terms[0])), p.meet (q).join (p.meet (terms[0])));
      }
  }
}

TEST (FreeDLProperties, MeetBelowJoinIffShared) {
  for (unsigned n = 1; n <= 4; ++n)
    for (GeneratorMask a = 1; a < (1u << n); ++a)
      for (GeneratorMask b = 1; b < (1u << n); ++b) {
        const auto join_b = AntichainTerm::from_truth_table (n, [&] {
          std::uint32_t t = 0;
          for (GeneratorMask v = 0; v < (1u << n); ++v)
            if (v & b)
              t |= 1u << v;
          return t;
        } ());
        EXPECT_EQ (term (n, {a}).leq (join_b), (a & b) != 0);
        EXPECT_EQ (meet_below_join (n, a, b), (a & b) != 0);
      }
}

TEST (FreeDLProperties, DecompositionExpandsBack) {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& t : generate_free (n).terms) {
      const auto b = meet_irreducible_decomposition (t);
      // Evaluate the meet of joins on every valuation.
      std::uint32_t table = 0;
      for (GeneratorMask v = 0; v < (1u << n); ++v) {
        bool all = true;
        for (auto j : b)
          all = all and (v & j) != 0;
        if (all)
          table |= 1u << v;
      }
      EXPECT_EQ (table, t.truth_table ());
    }
}

TEST (FreeDLProperties, ArrowTableMatchesLemma) {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto f = generate_free (n);
    const auto h = compute_arrow (f.lattice);
    EXPECT_FALSE (residuation_violation (h).has_value ());
    for (std::size_t a = 0; a < f.terms.size (); ++a)
      for (std::size_t b = 0; b < f.terms.size (); ++b)
        EXPECT_EQ (h.arrow (a, b), f.index_of (implication_lemma (f.terms[a], f.terms[b])));
  }
}

TEST (FreeDLProperties, FreeIsUpsetsOfCube) {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto f = generate_free (n);
    const auto up = from_upsets (cube (n)).lattice;
    EXPECT_TRUE (find_lattice_isomorphism (f.lattice, up).has_value ());
  }
}
