#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finlat/dlattice.hpp"
#include "finlat/modal.hpp"
#include "finlat/poset.hpp"
#include "finlat/tense.hpp"

namespace finlat::cli {

  inline constexpr int format_version = 1;

  enum class Kind { poset, dlattice, relspace, modal_algebra, tense_algebra };

  std::string_view kind_name (Kind k);

  // A parsed structure file. Exactly the member matching `kind` is set.
  struct Structure {
    Kind kind = Kind::poset;
    std::vector<std::string> elements;
    std::optional<Poset> poset;
    std::optional<DLattice> lattice;
    std::optional<RelSpace> space;
    std::optional<ModalAlgebra> modal;
    std::optional<TenseAlgebra> tense;

    bool operator== (const Structure& other) const;
  };

  // Names "0", "1", ... when `names` is empty.
  Structure make_structure (Poset p, std::vector<std::string> names = {});
  Structure make_structure (DLattice d, std::vector<std::string> names = {});
  Structure make_structure (RelSpace s, std::vector<std::string> names = {});
  Structure make_structure (ModalAlgebra m, std::vector<std::string> names = {});
  Structure make_structure (TenseAlgebra t, std::vector<std::string> names = {});

  // input_error with line and column for syntax errors and with the JSON
  // path for schema errors (unknown kind, undeclared or duplicate names,
  // tables of the wrong shape). Structural validation of the payload
  // (order axioms, lattice laws, box laws) is done by the library types.
  Structure parse_structure (std::string_view text);
  Structure load_structure (const std::string& path);

  // Canonical form: fixed field order, pairs sorted by element index,
  // reflexive order pairs omitted.
  std::string serialize (const Structure& s);

  // Index of a declared element name; input_error otherwise.
  std::size_t element_index (const Structure& s, std::string_view name);

}
