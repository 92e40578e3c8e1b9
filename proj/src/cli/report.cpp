#include "finlat/cli/report.hpp"

#include <algorithm>

namespace finlat::cli {

  namespace {
    void render (const Report& r, std::size_t depth, std::string& out) {
      const std::string indent (2 * depth, ' ');
      out += indent + r.name;
      if (r.verdict or not r.children.empty ())
        out += r.passed () ? ": PASS" : ": FAIL";
      out += "\n";
      for (auto it = r.details.begin (); it != r.details.end (); ++it) {
        const auto& v = it.value ();
        out += indent + "  " + it.key () + " = " + (v.is_string () ? v.get<std::string> () : v.dump ()) + "\n";
      }
      for (const auto& c : r.children)
        render (c, depth + 1, out);
    }
  }

  Report& Report::child (std::string child_name, std::optional<bool> child_verdict) {
    children.push_back ({std::move (child_name), child_verdict, nlohmann::ordered_json::object (), {}});
    return children.back ();
  }

  bool Report::passed () const {
    return verdict.value_or (true) and
           std::all_of (children.begin (), children.end (), [] (const Report& c) { return c.passed (); });
  }

  nlohmann::ordered_json to_json (const Report& r) {
    nlohmann::ordered_json out;
    out["name"] = r.name;
    out["passed"] = r.passed ();
    if (r.verdict)
      out["verdict"] = *r.verdict;
    if (not r.details.empty ())
      out["details"] = r.details;
    if (not r.children.empty ()) {
      out["children"] = nlohmann::ordered_json::array ();
      for (const auto& c : r.children)
        out["children"].push_back (to_json (c));
    }
    return out;
  }

  std::string render_text (const Report& r) {
    std::string out;
    render (r, 0, out);
    return out;
  }

}
