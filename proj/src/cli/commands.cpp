#include "finlat/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finlat/cli/check.hpp"
#include "finlat/cli/dot.hpp"
#include "finlat/cli/report.hpp"
#include "finlat/cli/structure_file.hpp"
#include "finlat/corpus.hpp"
#include "finlat/duality.hpp"
#include "finlat/errors.hpp"
#include "finlat/freedl.hpp"
#include "finlat/heyting.hpp"
#include "finlat/modal.hpp"
#include "finlat/omegaspace.hpp"
#include "finlat/tense.hpp"

namespace finlat::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct Options {
      std::uint64_t seed = corpus::default_seed;
      std::size_t max_size = 6;
      std::string report_path;
      std::string format = "text";
      std::string output_path;
      std::string file;
      std::vector<std::string> subset;
      std::string element;
      unsigned generators = 0;
      std::size_t bound = 10;
    };

    struct Outcome {
      Report report;
      std::optional<Structure> result;
    };

    std::string set_name (const ElementSet& s, const std::vector<std::string>& names) {
      std::string out = "{";
      bool first = true;
      for_each_member (s, [&] (std::size_t i) {
        out += (first ? "" : ",") + names[i];
        first = false;
      });
      return out + "}";
    }

    std::string world_set_name (WorldSet s, const std::vector<std::string>& names) {
      ElementSet e (names.size ());
      for (std::size_t x = 0; x < names.size (); ++x)
        if (s >> x & 1u)
          e.set (x);
      return set_name (e, names);
    }

    json set_list (const std::vector<FilterOrIdeal>& sets, const std::vector<std::string>& names) {
      json out = json::array ();
      for (const auto& s : sets)
        out.push_back (set_name (s.members, names));
      return out;
    }

    std::vector<std::string> subset_names (const std::vector<std::string>& names) {
      std::vector<std::string> out;
      for (std::size_t m = 0; m < (std::size_t {1} << names.size ()); ++m)
        out.push_back (world_set_name (m, names));
      return out;
    }

    const Structure& expect_kind (const Structure& s, std::initializer_list<Kind> allowed) {
      for (auto k : allowed)
        if (s.kind == k)
          return s;
      throw input_error ("this command does not accept a " + std::string (kind_name (s.kind)) + " file");
    }

    WorldSet parse_subset (const Structure& s, const std::vector<std::string>& subset) {
      if (subset.empty ())
        return all_worlds (s.elements.size ());
      WorldSet c = 0;
      for (const auto& name : subset)
        c |= WorldSet {1} << element_index (s, name);
      return c;
    }

    void class_agreement (Report& r, const ClassVerdict& algebra, const ClassVerdict& space) {
      auto& c = r.child ("class checks agree", algebra.k4 == space.k4 and algebra.s4 == space.s4 and
                                                   algebra.n_transitive == space.n_transitive and
                                                   algebra.least_transitivity == space.least_transitivity);
      c.details["K4"] = space.k4;
      c.details["S4"] = space.s4;
      c.details["least n-transitive"] = space.least_transitivity;
    }

    // ---- dual ---------------------------------------------------------------

    Outcome dual_command (const Options& o) {
      const auto in = load_structure (o.file);
      Outcome out {{"dual", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      r.details["input"] = std::string (kind_name (in.kind));
      switch (in.kind) {
        case Kind::dlattice: {
          const auto pd = priestley_dual (*in.lattice);
          std::vector<std::string> names;
          json filters = json::object ();
          for (std::size_t i = 0; i < pd.witness.backward.size (); ++i) {
            names.push_back ("F" + std::to_string (i));
            filters[names.back ()] = set_name (pd.witness.backward[i], in.elements);
          }
          r.details["prime filters"] = filters;
          r.child ("lattice is isomorphic to the upsets of its dual", pd.witness.iso);
          out.result = make_structure (pd.space, names);
          break;
        }
        case Kind::poset: {
          auto up = from_upsets (*in.poset);
          std::vector<std::string> names;
          for (const auto& u : up.upsets)
            names.push_back (set_name (u, in.elements));
          r.details["upsets"] = up.upsets.size ();
          const auto rt = round_trip_poset (*in.poset);
          r.child ("poset is isomorphic to the dual of its upset lattice", rt.iso);
          out.result = make_structure (std::move (up.lattice), names);
          break;
        }
        case Kind::modal_algebra: {
          const auto jt = space_from_algebra (*in.modal);
          std::vector<std::string> names;
          for (auto a : jt.atoms)
            names.push_back (in.elements[a]);
          r.child ("algebra is isomorphic to the powerset algebra of its dual space", jt.iso);
          r.child ("relation agrees with the atom and diamond form", jt.diamond_form_agrees);
          class_agreement (r, class_checks (*in.modal), class_checks (jt.space));
          out.result = make_structure (jt.space, names);
          break;
        }
        case Kind::relspace: {
          auto m = algebra_from_space (*in.space);
          const auto rt = round_trip_space (*in.space);
          r.child ("space is isomorphic to the ultrafilter space of its algebra", rt.iso);
          class_agreement (r, class_checks (m), class_checks (*in.space));
          out.result = make_structure (std::move (m), subset_names (in.elements));
          break;
        }
        case Kind::tense_algebra: {
          const auto jt = space_from_algebra (in.tense->future ());
          const auto past = converse (jt.space);
          bool matches = true;
          for (std::size_t a = 0; a < in.tense->size (); ++a)
            matches = matches and jt.representation[in.tense->past ().box (a)] ==
                                    past.box (jt.representation[a]);
          std::vector<std::string> names;
          for (auto a : jt.atoms)
            names.push_back (in.elements[a]);
          r.child ("future box is isomorphic to its dual space", jt.iso);
          r.child ("past box is the box of the converse relation", matches);
          out.result = make_structure (jt.space, names);
          break;
        }
      }
      return out;
    }

    // ---- free ---------------------------------------------------------------

    Outcome free_command (const Options& o) {
      const auto n = o.generators;
      const auto f = generate_free (n);
      Outcome out {{"free " + std::to_string (n), std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      r.details["generators"] = n;
      r.details["elements"] = f.lattice.size ();
      if (n <= max_oracle_generators) {
        const auto cube_iso = dual_is_cube (n);
        auto& c = r.child ("dual is isomorphic to the cube", cube_iso.iso);
        c.details["dual points"] = cube_iso.dual.size ();

        std::size_t mismatches = 0;
        json first = nullptr;
        for (const auto& p : f.terms)
          for (const auto& q : f.terms) {
            const auto lemma = implication_lemma (p, q);
            const auto oracle = implication_oracle (p, q);
            if (not (lemma == oracle)) {
              if (mismatches++ == 0)
                first = {{"p", p.to_string ()}, {"q", q.to_string ()}, {"lemma", lemma.to_string ()},
                         {"oracle", oracle.to_string ()}};
            }
          }
        auto& i = r.child ("implication table matches the oracle", mismatches == 0);
        i.details["pairs"] = f.terms.size () * f.terms.size ();
        i.details["mismatches"] = mismatches;
        if (mismatches)
          i.details["first mismatch"] = first;
      } else
        r.details["oracle"] = "not run above " + std::to_string (max_oracle_generators) + " generators";

      std::vector<std::string> names;
      for (const auto& t : f.terms)
        names.push_back (t.to_string ());
      out.result = make_structure (f.lattice, names);
      return out;
    }

    // ---- maximal ------------------------------------------------------------

    Outcome maximal_command (const Options& o) {
      const auto in = load_structure (o.file);
      expect_kind (in, {Kind::dlattice});
      const auto& d = *in.lattice;
      const auto& names = in.elements;
      Outcome out {{"maximal", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;

      std::vector<FilterOrIdeal> primes;
      for (auto& p : enumerate_prime_filters (d))
        primes.push_back (std::move (p.filter));
      r.details["prime filters"] = set_list (primes, names);
      r.details["prime ideals"] = set_list (enumerate_prime_ideals (d), names);
      const auto mi = maximal_ideals (d);
      const auto mf = maximal_filters (d);
      r.details["maximal ideals"] = set_list (mi, names);
      r.details["maximal filters"] = set_list (mf, names);
      r.child ("maximal ideals exist", not mi.empty ());
      r.child ("maximal filters exist", not mf.empty ());

      // Separation: whenever a is not below b, a prime ideal contains b but not a.
      auto& pit = r.child ("prime ideal separates every a not below b");
      std::size_t pairs = 0, failures = 0;
      json witnesses = json::array ();
      for (std::size_t a = 0; a < d.size (); ++a)
        for (std::size_t b = 0; b < d.size (); ++b) {
          if (d.leq (a, b))
            continue;
          ++pairs;
          const FilterOrIdeal f {SetKind::filter, d.up (a)};
          const FilterOrIdeal i {SetKind::ideal, d.down (b)};
          const auto w = pit_witness (d, f, i);
          const bool ok = is_prime (d, w) and i.members.is_subset_of (w.members) and
                          not w.members.intersects (f.members);
          if (not ok)
            ++failures;
          witnesses.push_back ({{"a", names[a]}, {"b", names[b]}, {"prime ideal", set_name (w.members, names)}});
        }
      pit.verdict = failures == 0;
      pit.details["pairs"] = pairs;
      pit.details["failures"] = failures;
      pit.details["witnesses"] = witnesses;
      return out;
    }

    // ---- qmax ---------------------------------------------------------------

    Outcome qmax_command (const Options& o) {
      const auto in = load_structure (o.file);
      expect_kind (in, {Kind::relspace});
      const auto& s = *in.space;
      const auto c = parse_subset (in, o.subset);
      Outcome out {{"qmax", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      const auto q = qmax (s, c);
      const auto e = eqmax (s, c);
      const auto restricted = restriction (s, c);
      const bool quasi_order = is_reflexive (restricted) and is_transitive (restricted);
      r.details["subset"] = world_set_name (c, in.elements);
      r.details["restriction is a quasi-order"] = quasi_order;
      r.details["qmax"] = world_set_name (q, in.elements);
      r.details["eqmax"] = world_set_name (e, in.elements);
      if (c != 0) {
        r.child ("eqmax is nonempty", e != 0);
        if (quasi_order)
          r.child ("qmax is nonempty", q != 0);
      }
      const auto w = wtmax_check (s, c);
      auto& wt = r.child ("eqmax agrees with qmax under the stabilizing power", w.agrees);
      wt.details["applicable"] = w.applicable;
      if (w.applicable) {
        wt.details["power"] = w.power;
        wt.details["qmax under the power"] = world_set_name (w.qmax_power, in.elements);
      }
      return out;
    }

    // ---- relativize ---------------------------------------------------------

    Outcome relativize_command (const Options& o) {
      const auto in = load_structure (o.file);
      expect_kind (in, {Kind::relspace, Kind::modal_algebra});
      Outcome out {{"relativize", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      if (in.kind == Kind::relspace) {
        if (o.subset.empty ())
          throw input_error ("relativizing a relation needs --subset");
        const auto c = parse_subset (in, o.subset);
        const auto check = relativize_dual_check (*in.space, c);
        r.details["subset"] = world_set_name (c, in.elements);
        r.child ("relativization is isomorphic to the algebra of the restriction", check.iso);
        r.child ("K4 is inherited", check.relativized.k4_inherited);
        std::vector<std::string> names;
        for (auto e : check.relativized.elements)
          names.push_back (world_set_name (e, in.elements));
        out.result = make_structure (check.relativized.algebra, names);
      } else {
        if (o.element.empty ())
          throw input_error ("relativizing an algebra needs --element");
        const auto a = static_cast<Index> (element_index (in, o.element));
        const auto rel = relativize (*in.modal, a);
        r.details["element"] = o.element;
        r.details["elements below"] = rel.elements.size ();
        r.child ("K4 is inherited", rel.k4_inherited);
        std::vector<std::string> names;
        for (auto e : rel.elements)
          names.push_back (in.elements[e]);
        out.result = make_structure (rel.algebra, names);
      }
      return out;
    }

    // ---- clmax --------------------------------------------------------------

    Outcome clmax_command (const Options& o) {
      const auto in = load_structure (o.file);
      expect_kind (in, {Kind::dlattice});
      const auto rep = clmax_pullback (*in.lattice);
      Outcome out {{"clmax", rep.verdict, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      r.details["ideals"] = rep.ideals.ideals.size ();
      r.child ("principal ideals embed", rep.ideals.embedding_verified);
      for (const auto& t : rep.triples) {
        std::vector<std::string> ideal_names;
        for (const auto& i : rep.ideals.ideals)
          ideal_names.push_back (set_name (i, in.elements));
        auto& c = r.child ("maximal ideal " + set_name (t.maximal_ideal, ideal_names),
                           t.pullback_maximal and t.probes_ok);
        c.details["pullback"] = set_name (t.pullback, in.elements);
        c.details["pullback is maximal"] = t.pullback_maximal;
        json probes = json::array ();
        for (const auto& p : t.probes)
          probes.push_back ({{"larger ideal", set_name (p.larger_ideal, in.elements)},
                             {"a", in.elements[p.a]},
                             {"b", in.elements[p.b]},
                             {"a v b", in.elements[in.lattice->join (p.a, p.b)]}});
        c.details["probes"] = probes;
      }
      return out;
    }

    // ---- booleanize ---------------------------------------------------------

    Outcome booleanize_command (const Options& o) {
      const auto in = load_structure (o.file);
      expect_kind (in, {Kind::dlattice});
      const auto h = compute_arrow (*in.lattice);
      const auto b = booleanization (h);
      Outcome out {{"booleanize", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      std::vector<std::string> names;
      for (auto a : b.inclusion)
        names.push_back (in.elements[a]);
      r.details["regular elements"] = names;
      r.child ("regular elements form a Boolean algebra", b.is_boolean);
      auto& f = r.child ("maximal filter maps are mutually inverse", b.filters.bijective);
      f.details["maximal filters of H"] = set_list (b.filters.heyting_filters, in.elements);
      f.details["maximal filters of B(H)"] = set_list (b.filters.boolean_filters, names);
      f.details["forward"] = b.filters.forward;
      f.details["backward"] = b.filters.backward;
      out.result = make_structure (b.boolean, names);
      return out;
    }

    // ---- omega-demo ---------------------------------------------------------

    Outcome omega_command (const Options& o) {
      using namespace omega;
      const auto e = verify_example (o.bound);
      Outcome out {{"omega-demo", std::nullopt, json::object (), {}}, std::nullopt};
      auto& r = out.report;
      r.details["bound"] = e.bound;
      auto& i = r.child ("(i) X is an Esakia space", e.esakia);
      i.details["clopens checked"] = e.family_size;
      i.details["down closures not clopen"] = e.down_not_clopen;
      i.details["up closures not clopen"] = e.up_not_clopen;
      auto& ii = r.child ("(ii) C is closed and not open", e.c_closed_not_open);
      ii.details["C"] = to_string (e.c);
      ii.details["closed"] = e.c_topology.closed;
      ii.details["open"] = e.c_topology.open;
      auto& iii = r.child ("(iii) {a_omega} is clopen in C", e.a_omega_clopen_in_c);
      iii.details["W"] = to_string (e.witness);
      auto& iv = r.child ("(iv) down{a_omega} is not clopen in C", e.down_not_clopen_in_c);
      iv.details["down{a_omega}"] = to_string (e.down_a_omega);
      iv.details["open in C"] = e.down_a_omega_in_c.open;
      iv.details["closed in C"] = e.down_a_omega_in_c.closed;
      iv.details["neighbourhoods of b_omega checked"] = e.neighbourhoods_checked;
      iv.details["neighbourhoods without some b_n"] = e.neighbourhoods_without_b;
      return out;
    }

    // ---- dot ----------------------------------------------------------------

    Outcome dot_command (const Options& o) {
      auto in = load_structure (o.file);
      Outcome out {{"dot", std::nullopt, json::object (), {}}, std::nullopt};
      out.report.details["kind"] = std::string (kind_name (in.kind));
      out.result = std::move (in);
      return out;
    }

    void write_file (const std::string& path, const std::string& text) {
      std::ofstream f (path);
      if (not f)
        throw input_error ("cannot write " + path);
      f << text;
    }

    int emit (const Outcome& o, const Options& opt, bool force_dot, std::ostream& out) {
      if (not opt.report_path.empty ())
        write_file (opt.report_path, to_json (o.report).dump (2) + "\n");
      if (not opt.output_path.empty () and o.result)
        write_file (opt.output_path, serialize (*o.result));
      if ((force_dot or opt.format == "dot") and o.result)
        out << structure_dot (*o.result);
      else if (opt.format == "json-report")
        out << to_json (o.report).dump (2) << "\n";
      else
        out << render_text (o.report);
      return exit_code (o.report);
    }
  }

  int exit_code (const Report& r) { return r.passed () ? exit_ok : exit_verdict; }

  int run (int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app {"Finite lattices, dualities and modal algebras"};
    app.name ("finlat");
    app.require_subcommand (1);
    Options opt;
    app.add_option ("--seed", opt.seed, "corpus seed")->capture_default_str ();
    app.add_option ("--max-size", opt.max_size, "largest corpus poset")->capture_default_str ();
    app.add_option ("--report", opt.report_path, "also write the JSON report here");
    app.add_option ("--format", opt.format, "output format")
      ->check (CLI::IsMember ({"text", "dot", "json-report"}))
      ->capture_default_str ();
    app.add_option ("-o,--output", opt.output_path, "write the resulting structure file here");

    std::function<Outcome (const Options&)> action;
    bool force_dot = false;
    auto file_command = [&] (const char* name, const char* help, auto fn) {
      auto* sub = app.add_subcommand (name, help);
      sub->add_option ("file", opt.file, "structure file")->required ();
      sub->callback ([&action, fn] { action = fn; });
      return sub;
    };

    file_command ("dual", "lattice <-> poset, modal algebra <-> relation", dual_command);
    auto* free = app.add_subcommand ("free", "free distributive lattice on n generators");
    free->add_option ("n", opt.generators, "generators")->required ();
    free->callback ([&] { action = free_command; });
    file_command ("maximal", "prime and maximal filters and ideals, prime ideal witnesses", maximal_command);
    file_command ("qmax", "quasi-maximal and eventually quasi-maximal worlds", qmax_command)
      ->add_option ("--subset", opt.subset, "world names (default: all)");
    auto* rel = file_command ("relativize", "relativization to an element or world set", relativize_command);
    rel->add_option ("--subset", opt.subset, "world names, for relations");
    rel->add_option ("--element", opt.element, "element name, for algebras");
    file_command ("clmax", "maximal ideals of the ideal lattice pulled back", clmax_command);
    file_command ("booleanize", "regular elements and maximal filter bijection", booleanize_command);
    auto* demo = app.add_subcommand ("omega-demo", "closed subspace of the two-chain space");
    demo->add_option ("--bound", opt.bound, "index bound of the clopen family")->capture_default_str ();
    demo->callback ([&] { action = omega_command; });
    auto* check = app.add_subcommand ("check", "property suite over the seeded corpus");
    check->callback ([&] { action = [] (const Options& o) { return Outcome {run_check (o.seed, o.max_size), std::nullopt}; }; });
    file_command ("dot", "DOT diagram of a structure file", dot_command)->callback ([&] {
      action = dot_command;
      force_dot = true;
    });

    try {
      app.parse (argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit (e, out, err) == 0 ? exit_ok : exit_input;
    }

    try {
      return emit (action (opt), opt, force_dot, out);
    } catch (const capacity_error& e) {
      err << "finlat: capacity: " << e.what () << "\n";
      return exit_capacity;
    } catch (const error& e) {
      err << "finlat: " << e.what () << "\n";
      return exit_input;
    } catch (const std::exception& e) {
      err << "finlat: internal error: " << e.what () << "\n";
      return exit_verdict;
    }
  }

}
