#include "finlat/freedl.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "finlat/duality.hpp"
#include "finlat/errors.hpp"

namespace finlat {

  namespace {
    void check_generators (unsigned n, unsigned bound) {
      if (n > bound)
        throw capacity_error ("free lattice on " + std::to_string (n) +
                              " generators exceeds the bound of " + std::to_string (bound));
    }

    std::vector<GeneratorMask> minimize (std::vector<GeneratorMask> masks) {
      std::sort (masks.begin (), masks.end ());
      masks.erase (std::unique (masks.begin (), masks.end ()), masks.end ());
      std::vector<GeneratorMask> out;
      for (auto m : masks) {
        bool dominated = false;
        for (auto o : masks)
          if (o != m and (o & m) == o) {
            dominated = true;
            break;
          }
        if (not dominated)
          out.push_back (m);
      }
      return out;
    }

    AntichainTerm join_of_generators (unsigned n, GeneratorMask b) {
      std::vector<GeneratorMask> singletons;
      for (unsigned g = 0; g < n; ++g)
        if (b & (1u << g))
          singletons.push_back (1u << g);
      return AntichainTerm::normalize (n, std::move (singletons));
    }

    std::vector<std::uint32_t> monotone_tables (unsigned n) {
      // A monotone function on n variables splits on the last variable into
      // f0 <= f1 on n-1 variables.
      std::vector<std::uint32_t> tables {0u, 1u};
      for (unsigned k = 1; k <= n; ++k) {
        const unsigned half = 1u << (k - 1);
        std::vector<std::uint32_t> next;
        for (auto f0 : tables)
          for (auto f1 : tables)
            if ((f0 & ~f1) == 0)
              next.push_back (f0 | (f1 << half));
        tables = std::move (next);
      }
      std::sort (tables.begin (), tables.end ());
      return tables;
    }

    const std::vector<AntichainTerm>& oracle_terms (unsigned n) {
      static const auto all = [] {
        std::array<std::vector<AntichainTerm>, max_oracle_generators + 1> out;
        for (unsigned k = 0; k <= max_oracle_generators; ++k)
          for (auto t : monotone_tables (k))
            out[k].push_back (AntichainTerm::from_truth_table (k, t));
        return out;
      } ();
      return all[n];
    }
  }

  AntichainTerm AntichainTerm::normalize (unsigned n, std::vector<GeneratorMask> raw) {
    check_generators (n, max_free_generators);
    for (auto m : raw)
      if (m >> n)
        throw input_error ("generator subset mask " + std::to_string (m) + " mentions a generator >= " +
                           std::to_string (n));
    return AntichainTerm (n, minimize (std::move (raw)));
  }

  AntichainTerm AntichainTerm::join (const AntichainTerm& other) const {
    auto raw = meets_;
    raw.insert (raw.end (), other.meets_.begin (), other.meets_.end ());
    return AntichainTerm (n_, minimize (std::move (raw)));
  }

  AntichainTerm AntichainTerm::meet (const AntichainTerm& other) const {
    std::vector<GeneratorMask> raw;
    raw.reserve (meets_.size () * other.meets_.size ());
    for (auto s : meets_)
      for (auto t : other.meets_)
        raw.push_back (s | t);
    return AntichainTerm (n_, minimize (std::move (raw)));
  }

  bool AntichainTerm::leq (const AntichainTerm& other) const {
    return std::all_of (meets_.begin (), meets_.end (), [&] (GeneratorMask s) {
      return std::any_of (other.meets_.begin (), other.meets_.end (),
                          [&] (GeneratorMask t) { return (t & s) == t; });
    });
  }

  std::uint32_t AntichainTerm::truth_table () const {
    std::uint32_t table = 0;
    for (std::uint32_t v = 0; v < (1u << n_); ++v)
      for (auto s : meets_)
        if ((s & v) == s) {
          table |= 1u << v;
          break;
        }
    return table;
  }

  AntichainTerm AntichainTerm::from_truth_table (unsigned n, std::uint32_t table) {
    check_generators (n, max_free_generators);
    std::vector<GeneratorMask> minimal;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      if (not (table >> v & 1u))
        continue;
      bool is_min = true;
      for (unsigned g = 0; g < n and is_min; ++g)
        if ((v >> g & 1u) and (table >> (v ^ (1u << g)) & 1u))
          is_min = false;
      if (is_min)
        minimal.push_back (v);
    }
    return AntichainTerm (n, std::move (minimal));
  }

  std::string AntichainTerm::to_string () const {
    if (is_zero ())
      return "0";
    if (is_one ())
      return "1";
    std::string out;
    for (std::size_t i = 0; i < meets_.size (); ++i) {
      if (i)
        out += " | ";
      bool first = true;
      for (unsigned g = 0; g < n_; ++g)
        if (meets_[i] >> g & 1u) {
          if (not first)
            out += "&";
          out += "x" + std::to_string (g);
          first = false;
        }
    }
    return out;
  }

  Index FreeLattice::index_of (const AntichainTerm& t) const {
    const auto table = t.truth_table ();
    auto it = std::lower_bound (truth_tables.begin (), truth_tables.end (), table);
    if (it == truth_tables.end () or *it != table or t.generators () != generators)
      throw input_error ("term " + t.to_string () + " is not an element of this free lattice");
    return static_cast<Index> (it - truth_tables.begin ());
  }

  FreeLattice generate_free (unsigned n) {
    check_generators (n, max_free_generators);
    auto tables = monotone_tables (n);
    const auto size = tables.size ();
    auto index = [&] (std::uint32_t t) {
      return static_cast<Index> (std::lower_bound (tables.begin (), tables.end (), t) - tables.begin ());
    };
    std::vector<Index> meet (size * size), join (size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a; b < size; ++b) {
        meet[a * size + b] = meet[b * size + a] = index (tables[a] & tables[b]);
        join[a * size + b] = join[b * size + a] = index (tables[a] | tables[b]);
      }
    std::vector<AntichainTerm> terms;
    terms.reserve (size);
    for (auto t : tables)
      terms.push_back (AntichainTerm::from_truth_table (n, t));
    return {n, DLattice::from_tables_unchecked (size, std::move (meet), std::move (join)),
            std::move (terms), std::move (tables)};
  }

  std::vector<GeneratorMask> meet_irreducible_decomposition (const AntichainTerm& t) {
    // Minimal transversals, one hyperedge at a time.
    std::vector<GeneratorMask> current {0};
    for (auto s : t.meets ()) {
      std::vector<GeneratorMask> next;
      for (auto b : current)
        for (unsigned g = 0; g < t.generators (); ++g)
          if (s >> g & 1u)
            next.push_back (b | (1u << g));
      current = minimize (std::move (next));
    }

    auto expanded = AntichainTerm::one (t.generators ());
    for (auto b : current)
      expanded = expanded.meet (join_of_generators (t.generators (), b));
    if (not (expanded == t))
      throw std::logic_error ("meet-of-joins form of " + t.to_string () + " expands to " +
                              expanded.to_string ());
    return current;
  }

  AntichainTerm implication_lemma (const AntichainTerm& p, const AntichainTerm& q) {
    if (p.generators () != q.generators ())
      throw input_error ("terms over different generator counts");
    const auto n = p.generators ();
    const auto meet_irreducibles = meet_irreducible_decomposition (q);
    auto result = AntichainTerm::one (n);
    for (auto s : p.meets ())
      for (auto t : meet_irreducibles)
        if ((s & t) == 0)
          result = result.meet (join_of_generators (n, t));
    return result;
  }

  AntichainTerm implication_oracle (const AntichainTerm& p, const AntichainTerm& q) {
    if (p.generators () != q.generators ())
      throw input_error ("terms over different generator counts");
    check_generators (p.generators (), max_oracle_generators);
    auto result = AntichainTerm::zero (p.generators ());
    for (const auto& r : oracle_terms (p.generators ()))
      if (p.meet (r).leq (q))
        result = result.join (r);
    return result;
  }

  CubeIsomorphism dual_is_cube (unsigned n) {
    check_generators (n, max_oracle_generators);
    const auto free = generate_free (n);
    auto dual = priestley_dual (free.lattice);
    CubeIsomorphism out {std::move (dual.space), cube (n), {}, {}, dual.witness.iso};
    for (const auto& filter : dual.witness.backward) {
      Index least = free.lattice.top ();
      for_each_member (filter, [&] (std::size_t a) { least = free.lattice.meet (least, a); });
      const auto& meets = free.terms[least].meets ();
      if (meets.size () != 1 or filter != free.lattice.up (least)) {
        out.iso = false;
        out.generator_sets.push_back (0);
        out.map.push_back (0);
        continue;
      }
      const auto a = meets[0];
      std::size_t idx = 0;
      for (unsigned g = 0; g < n; ++g)
        if (a >> g & 1u)
          idx |= std::size_t {1} << (n - 1 - g);
      out.generator_sets.push_back (a);
      out.map.push_back (idx);
    }
    out.iso = out.iso and is_order_isomorphism (out.dual, out.cube, out.map);
    return out;
  }

}
