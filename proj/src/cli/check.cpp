#include "finlat/cli/check.hpp"

#include <string>

#include "finlat/corpus.hpp"
#include "finlat/duality.hpp"
#include "finlat/freedl.hpp"
#include "finlat/heyting.hpp"
#include "finlat/modal.hpp"
#include "finlat/omegaspace.hpp"
#include "finlat/tense.hpp"

namespace finlat::cli {

  namespace {
    class Suite {
      public:
        explicit Suite (std::string name) : report_ {std::move (name), std::nullopt, {}, {}} {}

        // Records one case; `label` describes it in the first failure.
        void expect (bool ok, const std::string& label) {
          ++cases_;
          if (not ok and failures_++ == 0)
            report_.details["first failure"] = label;
        }

        Report finish () {
          report_.verdict = failures_ == 0;
          report_.details["cases"] = cases_;
          report_.details["failures"] = failures_;
          return std::move (report_);
        }

      private:
        Report report_;
        std::size_t cases_ = 0;
        std::size_t failures_ = 0;
    };

    std::string describe (const RelSpace& s) {
      std::string out = std::to_string (s.size ()) + " worlds:";
      for (std::size_t x = 0; x < s.size (); ++x)
        for (std::size_t y = 0; y < s.size (); ++y)
          if (s.rel (x, y))
            out += " " + std::to_string (x) + "R" + std::to_string (y);
      return out;
    }

    std::string describe (const Poset& p) {
      std::string out = std::to_string (p.size ()) + " points:";
      for (auto [i, j] : covers (p))
        out += " " + std::to_string (i) + "<" + std::to_string (j);
      return out;
    }

    std::string describe (const DLattice& d) { return "lattice of " + std::to_string (d.size ()) + " elements"; }

    std::vector<RelSpace> all_relations (std::size_t max_worlds) {
      std::vector<RelSpace> out;
      for (std::size_t n = 1; n <= max_worlds; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t {1} << (n * n)); ++code)
          out.push_back (RelSpace::from_code (n, code));
      return out;
    }

    bool same_class (const ClassVerdict& a, const ClassVerdict& b) {
      return a.k4 == b.k4 and a.s4 == b.s4 and a.n_transitive == b.n_transitive and
             a.least_transitivity == b.least_transitivity;
    }
  }

  Report run_check (std::uint64_t seed, std::size_t max_size) {
    Report root {"check", std::nullopt, {}, {}};
    root.details["seed"] = seed;
    root.details["max size"] = max_size;

    const auto posets = corpus::posets (seed, 200, max_size);
    const auto lattices = corpus::lattices (seed, max_size);
    const auto relations = corpus::relations (seed, 200, 5);

    {
      Suite s ("duality round trips");
      for (const auto& p : posets) {
        s.expect (round_trip_poset (p).iso, describe (p));
        const auto up = from_upsets (p).lattice;
        if (not up.trivial ())
          s.expect (round_trip_lattice (up).iso, "Up of " + describe (p));
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("free lattices");
      for (unsigned n = 0; n <= max_oracle_generators; ++n)
        s.expect (dual_is_cube (n).iso, "cube at n = " + std::to_string (n));
      for (unsigned n = 0; n <= 3; ++n) {
        const auto f = generate_free (n);
        for (const auto& p : f.terms)
          for (const auto& q : f.terms)
            s.expect (implication_lemma (p, q) == implication_oracle (p, q),
                      p.to_string () + " -> " + q.to_string ());
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("maximal ideal pullback");
      for (const auto& d : lattices)
        s.expect (clmax_pullback (d).verdict, describe (d));
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("booleanization");
      for (const auto& d : lattices) {
        const auto b = booleanization (compute_arrow (d));
        s.expect (b.is_boolean and b.filters.bijective, describe (d));
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("modal duality");
      for (const auto& r : relations) {
        s.expect (round_trip_space (r).iso, describe (r));
        s.expect (same_class (class_checks (algebra_from_space (r)), class_checks (r)), "classes of " + describe (r));
      }
      for (const auto& m : corpus::modal_algebras (seed, 60, 4)) {
        const auto jt = space_from_algebra (m);
        s.expect (jt.iso and jt.diamond_form_agrees and same_class (class_checks (m), class_checks (jt.space)),
                  "algebra of " + std::to_string (m.size ()) + " elements");
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("reflexivization");
      for (const auto& r : corpus::transitive_relations (seed, 100, 5)) {
        const auto ra = reflexivize (algebra_from_space (r));
        const auto rs = reflexivize (r);
        s.expect (ra.s4_verified and rs.qmax_preserved and
                    ra.algebra.box_table () == algebra_from_space (rs.space).box_table (),
                  describe (r));
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("relativization");
      for (const auto& r : corpus::relations (seed, 40, 4))
        for (WorldSet c = 1; c <= r.worlds (); ++c) {
          const auto check = relativize_dual_check (r, c);
          s.expect (check.iso and check.relativized.k4_inherited, describe (r) + " to " + std::to_string (c));
        }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("maximality");
      for (const auto& p : posets) {
        if (p.size () == 0)
          continue;
        s.expect (max_points (p, p.carrier ()).any () and min_points (p, p.carrier ()).any (), describe (p));
      }
      for (const auto& d : lattices) {
        if (d.trivial ())
          continue;
        s.expect (not maximal_ideals (d).empty () and not maximal_filters (d).empty (), describe (d));
      }
      for (const auto& r : relations)
        for (WorldSet c = 1; c <= r.worlds (); ++c) {
          const auto rc = restriction (r, c);
          if (is_reflexive (rc) and is_transitive (rc))
            s.expect (qmax (r, c) != 0, "qmax of " + describe (r));
          s.expect (eqmax (r, c) != 0, "eqmax of " + describe (r));
        }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("weak transitivity reduction");
      for (const auto& r : all_relations (3))
        for (WorldSet c = 1; c <= r.worlds (); ++c)
          s.expect (wtmax_check (r, c).agrees, describe (r));
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("tense");
      for (const auto& r : all_relations (3)) {
        const auto t = tense_from_space (r);
        s.expect (is_s4t (t) == (is_reflexive (r) and is_transitive (r)), describe (r));
        if (is_s4t (t)) {
          const auto d = biheyting_dual_check (r);
          s.expect (d.lattice_iso and d.formula_mismatches == 0, "fixpoints of " + describe (r));
        }
      }
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("omega space");
      s.expect (omega::verify_example (10).all (), "verify_example at bound 10");
      root.children.push_back (s.finish ());
    }
    {
      Suite s ("ultrafilter through the identity-box quotient");
      for (const auto& b : corpus::booleans (seed, 4))
        for (const auto& f : enumerate_filters (b)) {
          if (f.members.test (b.bottom ()))
            continue;
          const auto r = famax_quotient (b, f.members);
          s.expect (r.is_ultrafilter and r.extends_filter, describe (b));
        }
      root.children.push_back (s.finish ());
    }
    return root;
  }

}
