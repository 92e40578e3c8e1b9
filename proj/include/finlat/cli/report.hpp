#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace finlat::cli {

  // Verdict tree: suite -> case -> witness. A node passes when its own
  // verdict (if any) holds and every child passes.
  struct Report {
    std::string name;
    std::optional<bool> verdict;
    nlohmann::ordered_json details = nlohmann::ordered_json::object ();
    std::vector<Report> children;

    Report& child (std::string child_name, std::optional<bool> child_verdict = std::nullopt);
    bool passed () const;
  };

  nlohmann::ordered_json to_json (const Report& r);
  // Indented text rendering of the same tree.
  std::string render_text (const Report& r);

}
