#include "finlat/cli/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "finlat/errors.hpp"

namespace finlat::cli {

  using json = nlohmann::ordered_json;

  namespace {
    const std::pair<Kind, std::string_view> kinds[] = {
      {Kind::poset, "poset"},
      {Kind::dlattice, "dlattice"},
      {Kind::relspace, "relspace"},
      {Kind::modal_algebra, "modal-algebra"},
      {Kind::tense_algebra, "tense-algebra"},
    };

    std::vector<std::string> default_names (std::vector<std::string> names, std::size_t n) {
      if (names.empty ())
        for (std::size_t i = 0; i < n; ++i)
          names.push_back (std::to_string (i));
      if (names.size () != n)
        throw input_error ("expected " + std::to_string (n) + " element names, got " + std::to_string (names.size ()));
      return names;
    }

    std::string line_column (std::string_view text, std::size_t byte) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i < byte and i < text.size (); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else
          ++column;
      }
      return "line " + std::to_string (line) + ", column " + std::to_string (column);
    }

    class Reader {
      public:
        explicit Reader (const json& root) : root_ (root) {}

        const json& field (const json& obj, const std::string& key, const std::string& path) const {
          if (not obj.contains (key))
            throw input_error (path + ": missing field \"" + key + "\"");
          return obj.at (key);
        }

        const json& array (const json& obj, const std::string& key, const std::string& path) const {
          const auto& v = field (obj, key, path);
          if (not v.is_array ())
            throw input_error (path + "/" + key + ": expected an array");
          return v;
        }

        void declare (const json& elements) {
          for (std::size_t i = 0; i < elements.size (); ++i) {
            const auto& e = elements[i];
            if (not e.is_string ())
              throw input_error ("/elements/" + std::to_string (i) + ": element names are strings");
            auto name = e.get<std::string> ();
            if (not index_.emplace (name, i).second)
              throw input_error ("/elements/" + std::to_string (i) + ": duplicate element \"" + name + "\"");
            names_.push_back (std::move (name));
          }
        }

        std::size_t lookup (const json& v, const std::string& path) const {
          if (not v.is_string ())
            throw input_error (path + ": expected an element name");
          auto it = index_.find (v.get<std::string> ());
          if (it == index_.end ())
            throw input_error (path + ": undeclared element \"" + v.get<std::string> () + "\"");
          return it->second;
        }

        std::vector<std::pair<std::size_t, std::size_t>> pairs (const std::string& key) const {
          const auto& list = array (root_, key, "");
          std::vector<std::pair<std::size_t, std::size_t>> out;
          for (std::size_t i = 0; i < list.size (); ++i) {
            const auto path = "/" + key + "/" + std::to_string (i);
            if (not list[i].is_array () or list[i].size () != 2)
              throw input_error (path + ": expected a pair of element names");
            out.emplace_back (lookup (list[i][0], path + "/0"), lookup (list[i][1], path + "/1"));
          }
          return out;
        }

        std::vector<Index> table (const std::string& key) const {
          const auto& rows = array (root_, key, "");
          const auto n = names_.size ();
          if (rows.size () != n)
            throw input_error ("/" + key + ": expected " + std::to_string (n) + " rows");
          std::vector<Index> out;
          for (std::size_t i = 0; i < n; ++i) {
            const auto path = "/" + key + "/" + std::to_string (i);
            if (not rows[i].is_array () or rows[i].size () != n)
              throw input_error (path + ": expected a row of " + std::to_string (n) + " names");
            for (std::size_t j = 0; j < n; ++j)
              out.push_back (static_cast<Index> (lookup (rows[i][j], path + "/" + std::to_string (j))));
          }
          return out;
        }

        std::vector<Index> map (const std::string& key) const {
          const auto& list = array (root_, key, "");
          if (list.size () != names_.size ())
            throw input_error ("/" + key + ": expected " + std::to_string (names_.size ()) + " entries");
          std::vector<Index> out;
          for (std::size_t i = 0; i < list.size (); ++i)
            out.push_back (static_cast<Index> (lookup (list[i], "/" + key + "/" + std::to_string (i))));
          return out;
        }

        const std::vector<std::string>& names () const { return names_; }

      private:
        const json& root_;
        std::map<std::string, std::size_t> index_;
        std::vector<std::string> names_;
    };

    json name_table (const std::vector<std::string>& names, std::size_t n, auto&& entry) {
      json rows = json::array ();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array ();
        for (std::size_t j = 0; j < n; ++j)
          row.push_back (names[entry (i, j)]);
        rows.push_back (std::move (row));
      }
      return rows;
    }

    json name_map (const std::vector<std::string>& names, std::size_t n, auto&& entry) {
      json out = json::array ();
      for (std::size_t i = 0; i < n; ++i)
        out.push_back (names[entry (i)]);
      return out;
    }

    void write_tables (json& out, const std::vector<std::string>& names, const DLattice& d) {
      out["meet"] = name_table (names, d.size (), [&] (std::size_t a, std::size_t b) { return d.meet (a, b); });
      out["join"] = name_table (names, d.size (), [&] (std::size_t a, std::size_t b) { return d.join (a, b); });
    }

    // Compact rendering: one line per table row or pair.
    std::string render (const json& j) {
      std::string out = "{\n";
      std::size_t k = 0;
      for (auto it = j.begin (); it != j.end (); ++it, ++k) {
        out += "  " + json (it.key ()).dump () + ": ";
        const auto& v = it.value ();
        if (v.is_array () and not v.empty () and v[0].is_array ()) {
          out += "[\n";
          for (std::size_t i = 0; i < v.size (); ++i)
            out += "    " + v[i].dump () + (i + 1 < v.size () ? ",\n" : "\n");
          out += "  ]";
        } else
          out += v.dump ();
        out += k + 1 < j.size () ? ",\n" : "\n";
      }
      return out + "}\n";
    }
  }

  std::string_view kind_name (Kind k) {
    for (auto [kind, name] : kinds)
      if (kind == k)
        return name;
    return "?";
  }

  bool Structure::operator== (const Structure& other) const {
    if (kind != other.kind or elements != other.elements)
      return false;
    switch (kind) {
      case Kind::poset: return *poset == *other.poset;
      case Kind::dlattice: return *lattice == *other.lattice;
      case Kind::relspace: return *space == *other.space;
      case Kind::modal_algebra:
        return modal->base () == other.modal->base () and modal->box_table () == other.modal->box_table ();
      case Kind::tense_algebra:
        return tense->base () == other.tense->base () and
               tense->future ().box_table () == other.tense->future ().box_table () and
               tense->past ().box_table () == other.tense->past ().box_table ();
    }
    return false;
  }

  Structure make_structure (Poset p, std::vector<std::string> names) {
    Structure s;
    s.kind = Kind::poset;
    s.elements = default_names (std::move (names), p.size ());
    s.poset = std::move (p);
    return s;
  }

  Structure make_structure (DLattice d, std::vector<std::string> names) {
    Structure s;
    s.kind = Kind::dlattice;
    s.elements = default_names (std::move (names), d.size ());
    s.lattice = std::move (d);
    return s;
  }

  Structure make_structure (RelSpace r, std::vector<std::string> names) {
    Structure s;
    s.kind = Kind::relspace;
    s.elements = default_names (std::move (names), r.size ());
    s.space = std::move (r);
    return s;
  }

  Structure make_structure (ModalAlgebra m, std::vector<std::string> names) {
    Structure s;
    s.kind = Kind::modal_algebra;
    s.elements = default_names (std::move (names), m.size ());
    s.modal = std::move (m);
    return s;
  }

  Structure make_structure (TenseAlgebra t, std::vector<std::string> names) {
    Structure s;
    s.kind = Kind::tense_algebra;
    s.elements = default_names (std::move (names), t.size ());
    s.tense = std::move (t);
    return s;
  }

  Structure parse_structure (std::string_view text) {
    json root;
    try {
      root = json::parse (text);
    } catch (const json::parse_error& e) {
      throw input_error ("parse error at " + line_column (text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what ());
    }
    if (not root.is_object ())
      throw input_error ("structure file must be a JSON object");

    Reader r (root);
    const auto& version = r.field (root, "format-version", "");
    if (not version.is_number_integer () or version.get<int> () != format_version)
      throw input_error ("/format-version: unsupported version " + version.dump ());
    const auto& kind = r.field (root, "kind", "");
    if (not kind.is_string ())
      throw input_error ("/kind: expected a string");
    auto it = std::find_if (std::begin (kinds), std::end (kinds),
                            [&] (const auto& k) { return k.second == kind.get<std::string> (); });
    if (it == std::end (kinds))
      throw input_error ("/kind: unknown kind " + kind.dump ());
    r.declare (r.array (root, "elements", ""));
    const auto n = r.names ().size ();

    switch (it->first) {
      case Kind::poset:
        return make_structure (Poset::from_pairs (n, r.pairs ("leq")), r.names ());
      case Kind::dlattice:
        return make_structure (DLattice::from_tables (n, r.table ("meet"), r.table ("join")), r.names ());
      case Kind::relspace:
        return make_structure (RelSpace::from_pairs (n, r.pairs ("rel")), r.names ());
      case Kind::modal_algebra:
        return make_structure (
          ModalAlgebra (DLattice::from_tables (n, r.table ("meet"), r.table ("join")), r.map ("box")), r.names ());
      case Kind::tense_algebra:
        return make_structure (TenseAlgebra (DLattice::from_tables (n, r.table ("meet"), r.table ("join")),
                                             r.map ("boxF"), r.map ("boxP")),
                               r.names ());
    }
    throw input_error ("/kind: unknown kind");
  }

  Structure load_structure (const std::string& path) {
    std::ifstream in (path);
    if (not in)
      throw input_error ("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf ();
    try {
      return parse_structure (buffer.str ());
    } catch (const input_error& e) {
      throw input_error (path + ": " + e.what ());
    }
  }

  std::string serialize (const Structure& s) {
    json out;
    out["format-version"] = format_version;
    out["kind"] = std::string (kind_name (s.kind));
    out["elements"] = s.elements;
    const auto& names = s.elements;
    const auto n = names.size ();
    switch (s.kind) {
      case Kind::poset: {
        json pairs = json::array ();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (i != j and s.poset->leq (i, j))
              pairs.push_back ({names[i], names[j]});
        out["leq"] = std::move (pairs);
        break;
      }
      case Kind::dlattice:
        write_tables (out, names, *s.lattice);
        break;
      case Kind::relspace: {
        json pairs = json::array ();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (s.space->rel (i, j))
              pairs.push_back ({names[i], names[j]});
        out["rel"] = std::move (pairs);
        break;
      }
      case Kind::modal_algebra:
        write_tables (out, names, s.modal->base ());
        out["box"] = name_map (names, n, [&] (std::size_t a) { return s.modal->box (a); });
        break;
      case Kind::tense_algebra:
        write_tables (out, names, s.tense->base ());
        out["boxF"] = name_map (names, n, [&] (std::size_t a) { return s.tense->future ().box (a); });
        out["boxP"] = name_map (names, n, [&] (std::size_t a) { return s.tense->past ().box (a); });
        break;
    }
    return render (out);
  }

  std::size_t element_index (const Structure& s, std::string_view name) {
    auto it = std::find (s.elements.begin (), s.elements.end (), name);
    if (it == s.elements.end ())
      throw input_error ("undeclared element \"" + std::string (name) + "\"");
    return static_cast<std::size_t> (it - s.elements.begin ());
  }

}
