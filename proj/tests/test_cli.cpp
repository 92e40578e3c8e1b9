#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "finlat/cli/check.hpp"
#include "finlat/cli/commands.hpp"
#include "finlat/cli/dot.hpp"
#include "finlat/cli/structure_file.hpp"
#include "finlat/corpus.hpp"
#include "finlat/errors.hpp"

using namespace finlat;
using namespace finlat::cli;

namespace {

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result run_cli (std::vector<std::string> args) {
    args.insert (args.begin (), "finlat");
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back (a.c_str ());
    std::ostringstream out, err;
    const int code = run (static_cast<int> (argv.size ()), argv.data (), out, err);
    return {code, out.str (), err.str ()};
  }

  class TempDir {
    public:
      TempDir () : path_ (std::filesystem::temp_directory_path () / ("finlat-test-" + std::to_string (::getpid ()))) {
        std::filesystem::create_directories (path_);
      }
      ~TempDir () { std::filesystem::remove_all (path_); }

      std::string write (const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream (p) << text;
        return p.string ();
      }

      std::string path (const std::string& name) const { return (path_ / name).string (); }

    private:
      std::filesystem::path path_;
  };

  const char* chain3 = R"({"format-version": 1, "kind": "dlattice", "elements": ["0", "a", "1"],
    "meet": [["0", "0", "0"], ["0", "a", "a"], ["0", "a", "1"]],
    "join": [["0", "a", "1"], ["a", "a", "1"], ["1", "1", "1"]]})";

  std::string read (const std::string& path) {
    std::ifstream f (path);
    std::stringstream s;
    s << f.rdbuf ();
    return s.str ();
  }

}

TEST (StructureFile, RoundTripsEveryKind) {
  std::vector<Structure> structures;
  for (const auto& p : corpus::posets (corpus::default_seed, 20, 5))
    structures.push_back (make_structure (p));
  for (const auto& d : corpus::lattices (corpus::default_seed))
    structures.push_back (make_structure (d));
  for (const auto& r : corpus::relations (corpus::default_seed, 20, 4))
    structures.push_back (make_structure (r));
  for (const auto& m : corpus::modal_algebras (corpus::default_seed, 10, 3))
    structures.push_back (make_structure (m));
  structures.push_back (make_structure (tense_from_space (RelSpace::from_code (3, 0b010001100))));
  structures.push_back (make_structure (Poset::chain (2), {"low", "high"}));

  for (const auto& s : structures) {
    const auto text = serialize (s);
    const auto back = parse_structure (text);
    EXPECT_EQ (back, s) << text;
    EXPECT_EQ (serialize (back), text);
  }
}

TEST (StructureFile, ParseErrorsCarryPositions) {
  try {
    parse_structure ("{\"format-version\": 1,\n \"kind\": \"poset\",\n \"elements\": [\"a\" \"b\"]}");
    FAIL ();
  } catch (const input_error& e) {
    EXPECT_NE (std::string (e.what ()).find ("line 3, column"), std::string::npos) << e.what ();
  }
  try {
    parse_structure (R"({"format-version": 1, "kind": "poset", "elements": ["a", "b"], "leq": [["a", "c"]]})");
    FAIL ();
  } catch (const input_error& e) {
    EXPECT_NE (std::string (e.what ()).find ("/leq/0"), std::string::npos) << e.what ();
    EXPECT_NE (std::string (e.what ()).find ("\"c\""), std::string::npos) << e.what ();
  }
  EXPECT_THROW (parse_structure (R"({"format-version": 2, "kind": "poset", "elements": [], "leq": []})"), input_error);
  EXPECT_THROW (parse_structure (R"({"format-version": 1, "kind": "lattice", "elements": []})"), input_error);
  EXPECT_THROW (parse_structure (R"({"format-version": 1, "kind": "poset", "elements": ["a", "a"], "leq": []})"),
                input_error);
  // Well-formed file, but the tables are not a distributive lattice.
  const auto m = corpus::diamond ();
  EXPECT_THROW (DLattice::from_tables (5, m.meet_table (), m.join_table ()), input_error);
}

TEST (StructureFile, ElementIndex) {
  const auto s = parse_structure (chain3);
  EXPECT_EQ (element_index (s, "a"), 1u);
  EXPECT_THROW (element_index (s, "b"), input_error);
}

TEST (Dot, PosetUsesCovers) {
  const auto dot = poset_dot (Poset::chain (3), {"x", "y", "z"});
  EXPECT_NE (dot.find ("\"x\" -> \"y\""), std::string::npos);
  EXPECT_NE (dot.find ("\"y\" -> \"z\""), std::string::npos);
  EXPECT_EQ (dot.find ("\"x\" -> \"z\""), std::string::npos);
  const auto rel = relation_dot (RelSpace::identity (1), {"w"});
  EXPECT_NE (rel.find ("\"w\" -> \"w\""), std::string::npos);
}

TEST (Report, RenderingAndExitCode) {
  Report r {"suite", std::nullopt, {}, {}};
  r.child ("good", true);
  EXPECT_TRUE (r.passed ());
  EXPECT_EQ (exit_code (r), exit_ok);
  r.child ("bad", false).details["witness"] = 3;
  EXPECT_FALSE (r.passed ());
  EXPECT_EQ (exit_code (r), exit_verdict);
  const auto text = render_text (r);
  EXPECT_NE (text.find ("suite: FAIL"), std::string::npos);
  EXPECT_NE (text.find ("good: PASS"), std::string::npos);
  EXPECT_NE (text.find ("witness = 3"), std::string::npos);
  EXPECT_EQ (to_json (r)["children"][1]["passed"], false);
}

TEST (Cli, FreeTwo) {
  const auto r = run_cli ({"--format", "json-report", "free", "2"});
  ASSERT_EQ (r.code, exit_ok) << r.err;
  const auto j = nlohmann::json::parse (r.out);
  EXPECT_EQ (j["details"]["elements"], 6);
  EXPECT_TRUE (j["passed"].get<bool> ());
  std::size_t mismatches = 1;
  for (const auto& c : j["children"])
    if (c["details"].contains ("mismatches"))
      mismatches = c["details"]["mismatches"];
  EXPECT_EQ (mismatches, 0u);
}

TEST (Cli, OmegaDemo) {
  const auto r = run_cli ({"omega-demo"});
  EXPECT_EQ (r.code, exit_ok);
  EXPECT_NE (r.out.find ("omega-demo: PASS"), std::string::npos);
  for (const char* v : {"(i)", "(ii)", "(iii)", "(iv)"})
    EXPECT_NE (r.out.find (v), std::string::npos);
  EXPECT_EQ (r.out.find ("FAIL"), std::string::npos);
}

TEST (Cli, DualOfThreeChain) {
  TempDir dir;
  const auto file = dir.write ("chain3.json", chain3);
  const auto out = dir.path ("dual.json");
  const auto report = dir.path ("report.json");
  const auto r = run_cli ({"--format", "dot", "--report", report, "-o", out, "dual", file});
  ASSERT_EQ (r.code, exit_ok) << r.err;
  EXPECT_NE (r.out.find ("\"F0\" -> \"F1\""), std::string::npos);
  EXPECT_EQ (parse_structure (read (out)).poset, Poset::chain (2));
  const auto j = nlohmann::json::parse (read (report));
  EXPECT_TRUE (j["passed"].get<bool> ());
  EXPECT_EQ (j["details"]["prime filters"]["F1"], "{a,1}");
}

TEST (Cli, ExitCodes) {
  TempDir dir;
  EXPECT_EQ (run_cli ({"free", "6"}).code, exit_capacity);
  EXPECT_EQ (run_cli ({"free"}).code, exit_input);
  EXPECT_EQ (run_cli ({"dual", dir.path ("missing.json")}).code, exit_input);
  EXPECT_EQ (run_cli ({"--format", "svg", "free", "1"}).code, exit_input);
  const auto bad = dir.write ("bad.json", "{\"format-version\": 1,\n \"kind\": \"poset\",\n \"elements\": [\"a\" \"b\"]}");
  const auto r = run_cli ({"dual", bad});
  EXPECT_EQ (r.code, exit_input);
  EXPECT_NE (r.err.find ("line 3"), std::string::npos);
  const auto lattice = dir.write ("chain3.json", chain3);
  EXPECT_EQ (run_cli ({"qmax", lattice}).code, exit_input);
  EXPECT_EQ (run_cli ({"clmax", lattice}).code, exit_ok);
  EXPECT_EQ (run_cli ({"booleanize", lattice}).code, exit_ok);
  EXPECT_EQ (run_cli ({"maximal", lattice}).code, exit_ok);
}

TEST (Cli, RelationCommands) {
  TempDir dir;
  const auto file = dir.write ("chain.json", serialize (make_structure (RelSpace::from_code (2, 0b0010), {"x", "y"})));
  const auto q = run_cli ({"--format", "json-report", "qmax", file});
  ASSERT_EQ (q.code, exit_ok) << q.err;
  EXPECT_EQ (nlohmann::json::parse (q.out)["details"]["eqmax"], "{y}");
  const auto r = run_cli ({"-o", dir.path ("rel.json"), "relativize", "--subset", "y", file});
  ASSERT_EQ (r.code, exit_ok) << r.err;
  EXPECT_EQ (parse_structure (read (dir.path ("rel.json"))).modal->size (), 2u);
  EXPECT_EQ (run_cli ({"relativize", file}).code, exit_input);
  EXPECT_EQ (run_cli ({"dual", file}).code, exit_ok);
  EXPECT_EQ (run_cli ({"dot", file}).code, exit_ok);
}

TEST (Cli, CheckIsDeterministic) {
  const auto a = to_json (run_check (7, 5));
  const auto b = to_json (run_check (7, 5));
  EXPECT_EQ (a, b);
  EXPECT_TRUE (a["passed"].get<bool> ());
  for (const auto& suite : a["children"]) {
    EXPECT_GT (suite["details"]["cases"].get<std::size_t> (), 0u) << suite["name"];
    EXPECT_EQ (suite["details"]["failures"], 0) << suite["name"];
  }
}
