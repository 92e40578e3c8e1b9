// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "finlat/corpus.hpp"
#include "finlat/duality.hpp"
#include "finlat/freedl.hpp"
#include "finlat/heyting.hpp"
#include "finlat/modal.hpp"
#include "finlat/omegaspace.hpp"
#include "finlat/tense.hpp"
#include "oracles.hpp"

using namespace finlat;

namespace {

  const std::uint64_t seed = corpus::default_seed;

  struct Outcome {
    bool ok = true;
    std::string detail;
    double limit = 0;  // seconds, 0 for none
  };

  // Counts cases and failures; the first failure is kept for the report.
  class Tally {
    public:
      void expect (bool ok, const std::string& label) {
        ++cases_;
        if (not ok and failures_++ == 0)
          first_ = label;
      }

      std::size_t cases () const { return cases_; }
      bool ok () const { return failures_ == 0; }

      std::string summary () const {
        std::string s = std::to_string (cases_) + " cases, " + std::to_string (failures_) + " failures";
        if (failures_)
          s += ", first: " + first_;
        return s;
      }

    private:
      std::size_t cases_ = 0, failures_ = 0;
      std::string first_;
  };

  std::vector<RelSpace> all_relations (std::size_t n) {
    std::vector<RelSpace> out;
    for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code)
      out.push_back (RelSpace::from_code (n, code));
    return out;
  }

  std::vector<RelSpace> sampled_relations (std::size_t count) {
    corpus::Rng rng (seed ^ 0x5a5a);
    std::vector<RelSpace> out;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = 4 + i % 2;
      std::uniform_int_distribution<std::uint64_t> code (0, (std::uint64_t {1} << (n * n)) - 1);
      out.push_back (RelSpace::from_code (n, code (rng)));
    }
    return out;
  }

  bool same_class (const ClassVerdict& a, const ClassVerdict& b) {
    return a.k4 == b.k4 and a.s4 == b.s4 and a.n_transitive == b.n_transitive and
           a.least_transitivity == b.least_transitivity;
  }

  std::string code_of (const RelSpace& r) {
    std::uint64_t code = 0;
    for (std::size_t x = 0; x < r.size (); ++x)
      for (std::size_t y = 0; y < r.size (); ++y)
        if (r.rel (x, y))
          code |= std::uint64_t {1} << (x * r.size () + y);
    return std::to_string (r.size ()) + " worlds, code " + std::to_string (code);
  }

  // ---- 1 ---------------------------------------------------------------------

  Outcome duality_round_trips () {
    Tally t;
    const auto posets = corpus::posets (seed, 200, 6);
    for (const auto& p : posets) {
      const auto rt = round_trip_poset (p);
      const auto up = from_upsets (p).lattice;
      bool ok = rt.iso;
      if (not up.trivial ()) {
        ok = ok and oracle::posets_isomorphic (p, priestley_dual (up).space);
        ok = ok and round_trip_lattice (up).iso;
      }
      t.expect (ok, "poset of " + std::to_string (p.size ()) + " points");
    }
    for (const auto& d : corpus::lattices (seed)) {
      const auto up = from_upsets (priestley_dual (d).space).lattice;
      t.expect (round_trip_lattice (d).iso and oracle::lattices_isomorphic (d, up),
                "lattice of " + std::to_string (d.size ()));
    }
    return {t.ok () and posets.size () >= 200, std::to_string (posets.size ()) + " posets; " + t.summary (), 10};
  }

  // ---- 2 ---------------------------------------------------------------------

  Outcome free_sizes () {
    Tally t;
    const std::array<std::uint64_t, 6> dedekind {2, 3, 6, 20, 168, 7581};
    for (unsigned n = 0; n <= 5; ++n) {
      const auto oracle_count = oracle::antichain_count (n);
      const auto start = std::chrono::steady_clock::now ();
      const auto size = generate_free (n).lattice.size ();
      const std::chrono::duration<double> took = std::chrono::steady_clock::now () - start;
      t.expect (oracle_count == dedekind[n] and size == oracle_count and took.count () < 60,
                "n = " + std::to_string (n) + ": " + std::to_string (size) + " vs " + std::to_string (oracle_count));
    }
    for (unsigned n = 0; n <= 4; ++n)
      t.expect (dual_is_cube (n).iso, "cube at n = " + std::to_string (n));
    return {t.ok (), t.summary (), 60};
  }

  // ---- 3 ---------------------------------------------------------------------

  Outcome lemma_implication () {
    Tally t;
    std::size_t mismatches = 0;
    double n4_seconds = 0;
    for (unsigned n = 0; n <= 4; ++n) {
      const auto start = std::chrono::steady_clock::now ();
      const auto f = generate_free (n);
      for (const auto& p : f.terms)
        for (const auto& q : f.terms) {
          const bool ok = implication_lemma (p, q) == implication_oracle (p, q);
          mismatches += not ok;
          t.expect (ok, p.to_string () + " -> " + q.to_string ());
        }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now () - start;
      if (n == 4)
        n4_seconds = took.count ();
    }
    return {t.ok () and n4_seconds < 30,
            t.summary () + ", " + std::to_string (mismatches) + " mismatches, n = 4 in " + std::to_string (n4_seconds) + " s",
            0};
  }

  // ---- 4 ---------------------------------------------------------------------

  Outcome clmax () {
    Tally t;
    std::size_t probes = 0;
    for (const auto& d : corpus::lattices (seed)) {
      const auto rep = clmax_pullback (d);
      std::vector<oracle::Mask> proper;
      for (auto i : oracle::ideals (d))
        if (not (i >> d.top () & 1u))
          proper.push_back (i);
      const auto maximal = oracle::maximal_by_inclusion (proper);
      bool ok = rep.verdict and not rep.triples.empty ();
      for (const auto& tr : rep.triples) {
        ok = ok and tr.pullback_maximal and tr.probes_ok;
        ok = ok and std::find (maximal.begin (), maximal.end (), oracle::to_mask (tr.pullback)) != maximal.end ();
        for (const auto& p : tr.probes) {
          ++probes;
          ok = ok and d.join (p.a, p.b) == d.top () and p.larger_ideal.test (p.a) and not tr.pullback.test (p.a);
        }
      }
      t.expect (ok, "lattice of " + std::to_string (d.size ()));
    }
    return {t.ok (), t.summary () + ", " + std::to_string (probes) + " probes", 0};
  }

  // ---- 5 ---------------------------------------------------------------------

  Outcome booleanization_bijection () {
    Tally t;
    for (const auto& d : corpus::lattices (seed)) {
      const auto b = booleanization (compute_arrow (d));
      const auto& f = b.filters;
      bool ok = b.is_boolean and f.bijective and f.forward.size () == f.backward.size ();
      for (std::size_t i = 0; ok and i < f.forward.size (); ++i)
        ok = f.forward[i] < f.backward.size () and f.backward[f.forward[i]] == i;
      // Both sides hold exactly the maximal proper filters.
      std::vector<oracle::Mask> proper;
      for (auto x : oracle::filters (d))
        if (not (x >> d.bottom () & 1u))
          proper.push_back (x);
      ok = ok and oracle::maximal_by_inclusion (proper).size () == f.heyting_filters.size ();
      t.expect (ok, "lattice of " + std::to_string (d.size ()));
    }
    return {t.ok (), t.summary (), 0};
  }

  // ---- 6 ---------------------------------------------------------------------

  Outcome jonsson_tarski () {
    Tally t;
    std::vector<RelSpace> relations;
    for (std::size_t n = 1; n <= 3; ++n)
      for (auto& r : all_relations (n))
        relations.push_back (std::move (r));
    const auto exhaustive = relations.size ();
    for (auto& r : sampled_relations (1200))
      relations.push_back (std::move (r));
    for (const auto& r : relations) {
      const auto m = algebra_from_space (r);
      const auto jt = space_from_algebra (m);
      bool ok = round_trip_space (r).iso and jt.iso and jt.diamond_form_agrees;
      ok = ok and same_class (class_checks (m), class_checks (r)) and same_class (class_checks (m), class_checks (jt.space));
      for (Index u = 0; ok and u < m.size (); ++u)
        ok = m.box (u) == oracle::box (r, u);
      t.expect (ok, code_of (r));
    }
    for (const auto& m : corpus::modal_algebras (seed, 200, 4)) {
      const auto jt = space_from_algebra (m);
      t.expect (jt.iso and same_class (class_checks (m), class_checks (jt.space)),
                "abstract algebra of " + std::to_string (m.size ()));
    }
    return {t.ok (), std::to_string (exhaustive) + " exhaustive, " + std::to_string (relations.size () - exhaustive) +
                       " sampled; " + t.summary (),
            60};
  }

  // ---- 7 ---------------------------------------------------------------------

  Outcome reflexivization () {
    Tally t;
    for (const auto& r : corpus::transitive_relations (seed, 200, 5)) {
      const auto rs = reflexivize (r);
      const auto ra = reflexivize (algebra_from_space (r));
      bool ok = ra.s4_verified and class_checks (ra.algebra).s4 and rs.qmax_preserved;
      ok = ok and ra.algebra.box_table () == algebra_from_space (rs.space).box_table ();
      for (WorldSet c = 1; ok and c <= r.worlds (); ++c)
        ok = qmax (r, c) == qmax (rs.space, c);
      t.expect (ok, code_of (r));
    }
    for (const auto& m : corpus::modal_algebras (seed, 200, 4)) {
      if (not class_checks (m).k4)
        continue;
      const auto ra = reflexivize (m);
      t.expect (ra.s4_verified and class_checks (ra.algebra).s4, "abstract K4 algebra of " + std::to_string (m.size ()));
    }
    return {t.ok (), t.summary (), 0};
  }

  // ---- 8 ---------------------------------------------------------------------

  Outcome relativization () {
    Tally t;
    std::vector<RelSpace> relations;
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto& r : all_relations (n))
        relations.push_back (std::move (r));
    for (auto& r : corpus::relations (seed, 200, 5))
      relations.push_back (std::move (r));
    for (const auto& r : relations) {
      const bool k4 = is_transitive (r);
      for (WorldSet c = 1; c <= r.worlds (); ++c) {
        const auto check = relativize_dual_check (r, c);
        const bool inherited = not k4 or class_checks (check.relativized.algebra).k4;
        t.expect (check.iso and check.relativized.k4_inherited and inherited, code_of (r) + ", C = " + std::to_string (c));
      }
    }
    return {t.ok (), t.summary (), 0};
  }

  // ---- 9 ---------------------------------------------------------------------

  Outcome maximality () {
    Tally t;
    for (const auto& p : corpus::posets (seed, 200, 6))
      for (oracle::Mask c = 1; c < (oracle::Mask {1} << p.size ()); ++c) {
        const auto s = oracle::to_set (p.size (), c);
        t.expect (max_points (p, s).any () and min_points (p, s).any (), "poset subset");
      }
    for (const auto& d : corpus::lattices (seed))
      t.expect (not maximal_ideals (d).empty () and not maximal_filters (d).empty (), "lattice");
    for (const auto& r : corpus::relations (seed, 200, 5))
      for (WorldSet c = 1; c <= r.worlds (); ++c) {
        const auto rc = restriction (r, c);
        if (is_reflexive (rc) and is_transitive (rc))
          t.expect (qmax (r, c) != 0, "qmax, " + code_of (r));
        t.expect (eqmax (r, c) != 0, "eqmax, " + code_of (r));
      }
    return {t.ok (), t.summary (), 0};
  }

  // ---- 10 --------------------------------------------------------------------

  // Relations on at most 5 worlds as row masks.
  using Rows = std::array<std::uint8_t, 5>;

  Rows compose_rows (const Rows& a, const Rows& b, std::size_t n) {
    Rows out {};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a[x] >> y & 1u)
          out[x] |= b[y];
    return out;
  }

  std::uint8_t quasi_max_rows (const Rows& r, std::size_t n) {
    std::uint8_t out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (std::size_t y = 0; y < n; ++y)
        if ((r[x] >> y & 1u) and not (r[y] >> x & 1u))
          ok = false;
      if (ok)
        out |= 1u << x;
    }
    return out;
  }

  Outcome wtmax_reduction () {
    Tally t;
    std::size_t applicable = 0;
    // Every relation on m worlds, taken as R_C with C the full set.
    for (std::size_t m = 1; m <= 5; ++m) {
      Rows id {};
      for (std::size_t x = 0; x < m; ++x)
        id[x] = 1u << x;
      std::vector<WorldSet> lib_rows (m);
      for (std::uint64_t code = 0; code < (std::uint64_t {1} << (m * m)); ++code) {
        Rows r {};
        for (std::size_t x = 0; x < m; ++x) {
          r[x] = static_cast<std::uint8_t> (code >> (x * m) & ((1u << m) - 1));
          lib_rows[x] = r[x];
        }
        Rows star = id;
        for (;;) {
          auto next = compose_rows (star, r, m);
          for (std::size_t x = 0; x < m; ++x)
            next[x] |= star[x];
          if (next == star)
            break;
          star = next;
        }
        const auto lib = eqmax (RelSpace (lib_rows), all_worlds (m));
        bool ok = lib == quasi_max_rows (star, m) and lib != 0;
        Rows power = id;
        for (std::size_t n = 0; n <= m * m + m; ++n) {
          if (power == star) {
            ++applicable;
            ok = ok and lib == quasi_max_rows (power, m);
            break;
          }
          power = compose_rows (power, r, m);
        }
        t.expect (ok, std::to_string (m) + " worlds, code " + std::to_string (code));
      }
    }
    // The literal (R, c) quantification on up to 4 worlds.
    std::size_t literal = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code) {
        const auto r = RelSpace::from_code (n, code);
        for (WorldSet c = 1; c <= r.worlds (); ++c) {
          ++literal;
          t.expect (wtmax_check (r, c).agrees, code_of (r) + ", c = " + std::to_string (c));
        }
      }
    return {t.ok (), t.summary () + " (" + std::to_string (applicable) + " with R* a single power, " +
                       std::to_string (literal) + " literal pairs)",
            0};
  }

  // ---- 11 --------------------------------------------------------------------

  Outcome tense () {
    Tally t;
    const auto start = std::chrono::steady_clock::now ();
    std::size_t four = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code) {
        const auto r = RelSpace::from_code (n, code);
        const auto tf = tense_from_space (r);
        four += n == 4;
        t.expect (not connecting_axiom_violation (tf.future (), tf.past ()).has_value (), code_of (r));
      }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now () - start;

    std::vector<RelSpace> quasi_orders;
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& r : all_relations (n))
        if (is_reflexive (r) and is_transitive (r))
          quasi_orders.push_back (r);
    for (const auto& r : corpus::relations (seed, 200, 5))
      quasi_orders.push_back (star_closure (r));
    for (const auto& r : quasi_orders) {
      const auto bh = biheyting_fixpoints (tense_from_space (r));
      const auto dual = biheyting_dual_check (r);
      t.expect (not residuation_violation (bh.algebra) and not coresiduation_violation (bh.algebra) and
                  dual.lattice_iso and dual.formula_mismatches == 0,
                "fixpoints of " + code_of (r));
    }
    return {t.ok () and four == 65536 and took.count () < 60,
            t.summary () + ", " + std::to_string (four) + " relations on 4 worlds, axioms in " +
              std::to_string (took.count ()) + " s",
            0};
  }

  // ---- 12 --------------------------------------------------------------------

  Outcome omega_example () {
    const auto e = omega::verify_example (10);
    const bool c_ok = e.c == omega::set_union (omega::down_closure_sym (omega::TailSet::point_b (0)),
                                               omega::TailSet::a_omega ());
    const bool down_ok = e.down_a_omega == omega::set_union (omega::TailSet::a_omega (), omega::TailSet::b_omega ());
    std::string detail = std::string ("(i) ") + (e.esakia ? "true" : "false") + ", (ii) " +
                         (e.c_closed_not_open ? "true" : "false") + ", (iii) " +
                         (e.a_omega_clopen_in_c ? "true" : "false") + ", (iv) " +
                         (e.down_not_clopen_in_c ? "true" : "false");
    return {e.all () and c_ok and down_ok, detail, 1};
  }

  // ---- 13 --------------------------------------------------------------------

  Outcome famax () {
    Tally t;
    for (const auto& b : corpus::booleans (seed, 4))
      for (const auto& f : enumerate_filters (b)) {
        if (f.members.test (b.bottom ()))
          continue;
        const auto r = famax_quotient (b, f.members);
        // Ultrafilter: proper filter holding exactly one of each complementary pair.
        bool ultra = is_filter (b, r.pullback) and not r.pullback.test (b.bottom ());
        for (std::size_t a = 0; ultra and a < b.size (); ++a)
          ultra = r.pullback.test (a) != r.pullback.test (*complement (b, static_cast<Index> (a)));
        t.expect (ultra and r.is_ultrafilter and r.extends_filter and f.members.is_subset_of (r.pullback),
                  "Boolean of " + std::to_string (b.size ()));
      }
    return {t.ok (), t.summary (), 0};
  }

}

int main () {
  const std::vector<std::pair<const char*, std::function<Outcome ()>>> criteria {
    {"duality round trips", duality_round_trips},
    {"free lattice sizes", free_sizes},
    {"implication lemma", lemma_implication},
    {"maximal ideal pullback", clmax},
    {"booleanization bijection", booleanization_bijection},
    {"algebra/space duality", jonsson_tarski},
    {"reflexivization", reflexivization},
    {"relativization", relativization},
    {"maximality", maximality},
    {"weak transitivity reduction", wtmax_reduction},
    {"tense", tense},
    {"omega space", omega_example},
    {"ultrafilter via identity box", famax},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size (); ++i) {
    const auto start = std::chrono::steady_clock::now ();
    auto out = criteria[i].second ();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now () - start;
    if (out.limit > 0 and took.count () >= out.limit) {
      out.ok = false;
      out.detail += ", over the " + std::to_string (out.limit) + " s limit";
    }
    failed += not out.ok;
    std::printf ("AC%-2zu %s  %s: %s [%.2f s]\n", i + 1, out.ok ? "PASS" : "FAIL", criteria[i].first,
                 out.detail.c_str (), took.count ());
    std::fflush (stdout);
  }
  std::printf ("%zu/%zu criteria passed\n", criteria.size () - failed, criteria.size ());
  return failed == 0 ? 0 : 1;
}
