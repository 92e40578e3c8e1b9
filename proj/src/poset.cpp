#include "finlat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "finlat/errors.hpp"

namespace finlat {

  namespace {
    void check_size (const Poset& p, const ElementSet& s) {
      if (s.size () != p.size ())
        throw input_error ("element set of size " + std::to_string (s.size ()) +
                           " does not match carrier of size " + std::to_string (p.size ()));
    }

    std::string pair_str (std::size_t i, std::size_t j) {
      return "(" + std::to_string (i) + ", " + std::to_string (j) + ")";
    }
  }

  Poset::Poset (std::vector<ElementSet> up_rows) : up_ (std::move (up_rows)) {
    const auto n = up_.size ();
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i].size () != n)
        throw input_error ("order row " + std::to_string (i) + " has wrong length");
      if (not up_[i].test (i))
        throw input_error ("order is not reflexive at " + std::to_string (i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (up_[i].test (j) and up_[j].test (i))
          throw input_error ("order is not antisymmetric at " + pair_str (i, j));
    for (std::size_t i = 0; i < n; ++i)
      for_each_member (up_[i], [&] (std::size_t j) {
        if (not up_[j].is_subset_of (up_[i])) {
          auto k = (up_[j] - up_[i]).find_first ();
          throw input_error ("order is not transitive: " + pair_str (i, j) + " and " +
                             pair_str (j, k) + " but not " + pair_str (i, k));
        }
      });
    fill_down ();
  }

  Poset::Poset (std::vector<ElementSet> up_rows, trusted_tag) : up_ (std::move (up_rows)) {
    fill_down ();
  }

  void Poset::fill_down () {
    const auto n = up_.size ();
    down_.assign (n, ElementSet (n));
    for (std::size_t i = 0; i < n; ++i)
      for_each_member (up_[i], [&] (std::size_t j) { down_[j].set (i); });
  }

  Poset Poset::from_pairs (std::size_t n,
                           std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t i = 0; i < n; ++i)
      rows[i].set (i);
    for (auto [i, j] : pairs) {
      if (i >= n or j >= n)
        throw input_error ("order pair " + pair_str (i, j) + " out of range");
      rows[i].set (j);
    }
    // Warshall on rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rows[i].test (k))
          rows[i] |= rows[k];
    return Poset (std::move (rows));
  }

  Poset Poset::chain (std::size_t n) {
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        rows[i].set (j);
    return Poset (std::move (rows), trusted_tag {});
  }

  Poset Poset::antichain (std::size_t n) {
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t i = 0; i < n; ++i)
      rows[i].set (i);
    return Poset (std::move (rows), trusted_tag {});
  }

  ElementSet up_closure (const Poset& p, const ElementSet& s) {
    check_size (p, s);
    ElementSet out (p.size ());
    for_each_member (s, [&] (std::size_t y) { out |= p.up (y); });
    return out;
  }

  ElementSet down_closure (const Poset& p, const ElementSet& s) {
    check_size (p, s);
    ElementSet out (p.size ());
    for_each_member (s, [&] (std::size_t y) { out |= p.down (y); });
    return out;
  }

  bool is_upset (const Poset& p, const ElementSet& s) {
    return up_closure (p, s) == s;
  }

  bool is_downset (const Poset& p, const ElementSet& s) {
    return down_closure (p, s) == s;
  }

  ElementSet max_points (const Poset& p, const ElementSet& c) {
    check_size (p, c);
    ElementSet out (p.size ());
    for_each_member (c, [&] (std::size_t x) {
      if ((p.up (x) & c).count () == 1)
        out.set (x);
    });
    return out;
  }

  ElementSet min_points (const Poset& p, const ElementSet& c) {
    check_size (p, c);
    ElementSet out (p.size ());
    for_each_member (c, [&] (std::size_t x) {
      if ((p.down (x) & c).count () == 1)
        out.set (x);
    });
    return out;
  }

  Poset order_dual (const Poset& p) {
    return Poset (std::vector<ElementSet> (p.down_), Poset::trusted_tag {});
  }

  Poset product (const Poset& p, const Poset& q, std::size_t max_elements) {
    const auto np = p.size (), nq = q.size ();
    if (np != 0 and nq > max_elements / np)
      throw capacity_error ("product of posets of sizes " + std::to_string (np) + " and " +
                            std::to_string (nq) + " exceeds the bound of " +
                            std::to_string (max_elements) + " elements");
    const auto n = np * nq;
    std::vector<ElementSet> rows (n, ElementSet (n));
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < nq; ++b) {
        auto& row = rows[a * nq + b];
        for_each_member (p.up (a), [&] (std::size_t a2) {
          for_each_member (q.up (b), [&] (std::size_t b2) { row.set (a2 * nq + b2); });
        });
      }
    return Poset (std::move (rows), Poset::trusted_tag {});
  }

  Poset cube (std::size_t n, std::size_t max_elements) {
    if (n >= 63 or (std::size_t {1} << n) > max_elements)
      throw capacity_error ("cube of dimension " + std::to_string (n) + " exceeds the bound of " +
                            std::to_string (max_elements) + " elements");
    auto result = Poset::chain (1);
    const auto two = Poset::chain (2);
    for (std::size_t i = 0; i < n; ++i)
      result = product (two, result, max_elements);
    return result;
  }

  std::vector<std::size_t> cluster_partition (std::span<const ElementSet> rel) {
    const auto n = rel.size ();
    constexpr auto unset = static_cast<std::size_t> (-1);
    std::vector<std::size_t> class_of (n, unset);
    std::size_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (class_of[x] != unset)
        continue;
      class_of[x] = next;
      for (std::size_t y = x + 1; y < n; ++y)
        if (class_of[y] == unset and rel[x].test (y) and rel[y].test (x))
          class_of[y] = next;
      ++next;
    }
    return class_of;
  }

  Poset quotient (std::span<const ElementSet> rel, std::span<const std::size_t> class_of) {
    const auto n = rel.size ();
    if (class_of.size () != n)
      throw input_error ("partition covers " + std::to_string (class_of.size ()) +
                         " elements, relation has " + std::to_string (n));
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i].size () != n)
        throw input_error ("relation row " + std::to_string (i) + " has wrong length");
    std::size_t k = 0;
    for (auto c : class_of)
      k = std::max (k, c + 1);
    std::vector<std::size_t> rep (k, n);
    for (std::size_t i = 0; i < n; ++i)
      if (rep[class_of[i]] == n)
        rep[class_of[i]] = i;
    for (std::size_t c = 0; c < k; ++c)
      if (rep[c] == n)
        throw input_error ("partition class " + std::to_string (c) + " is empty");

    // Well defined: relatedness depends only on the classes.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rel[x].test (y) != rel[rep[class_of[x]]].test (rep[class_of[y]]))
          throw well_definedness_error (
            "induced relation not well defined: " + pair_str (x, y) + " vs representatives " +
            pair_str (rep[class_of[x]], rep[class_of[y]]));

    std::vector<ElementSet> rows (k, ElementSet (k));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d)
        if (rel[rep[c]].test (rep[d]))
          rows[c].set (d);
    for (std::size_t c = 0; c < k; ++c) {
      if (not rows[c].test (c))
        throw well_definedness_error ("induced relation not reflexive at class " +
                                      std::to_string (c));
      for (std::size_t d = c + 1; d < k; ++d)
        if (rows[c].test (d) and rows[d].test (c))
          throw well_definedness_error ("induced relation not antisymmetric at classes " +
                                        pair_str (c, d));
      for_each_member (rows[c], [&] (std::size_t d) {
        if (not rows[d].is_subset_of (rows[c]))
          throw well_definedness_error ("induced relation not transitive at classes " +
                                        pair_str (c, d));
      });
    }
    return Poset (std::move (rows), Poset::trusted_tag {});
  }

  std::vector<std::pair<std::size_t, std::size_t>> covers (const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < p.size (); ++i)
      for_each_member (p.up (i), [&] (std::size_t j) {
        if (i != j and (p.up (i) & p.down (j)).count () == 2)
          out.emplace_back (i, j);
      });
    return out;
  }

  std::vector<std::size_t> linear_extension (const Poset& p) {
    std::vector<std::size_t> order (p.size ());
    std::iota (order.begin (), order.end (), 0);
    // Strict down-set sizes strictly increase along <, so sorting by them works.
    std::stable_sort (order.begin (), order.end (), [&] (std::size_t a, std::size_t b) {
      return p.down (a).count () < p.down (b).count ();
    });
    return order;
  }

  bool is_order_isomorphism (const Poset& p, const Poset& q, std::span<const std::size_t> map) {
    const auto n = p.size ();
    if (q.size () != n or map.size () != n)
      return false;
    ElementSet hit (n);
    for (auto m : map) {
      if (m >= n or hit.test (m))
        return false;
      hit.set (m);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq (i, j) != q.leq (map[i], map[j]))
          return false;
    return true;
  }

  std::optional<std::vector<std::size_t>> find_isomorphism (const Poset& p, const Poset& q) {
    const auto n = p.size ();
    if (q.size () != n)
      return std::nullopt;
    auto signature = [] (const Poset& r, std::size_t i) {
      return std::pair {r.up (i).count (), r.down (i).count ()};
    };
    std::vector<std::size_t> map (n, n);
    ElementSet used (n);
    auto order = linear_extension (p);

    auto extend = [&] (auto& self, std::size_t depth) -> bool {
      if (depth == n)
        return true;
      const auto i = order[depth];
      for (std::size_t cand = 0; cand < n; ++cand) {
        if (used.test (cand) or signature (p, i) != signature (q, cand))
          continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth and ok; ++d) {
          const auto j = order[d];
          ok = p.leq (i, j) == q.leq (cand, map[j]) and p.leq (j, i) == q.leq (map[j], cand);
        }
        if (not ok)
          continue;
        map[i] = cand;
        used.set (cand);
        if (self (self, depth + 1))
          return true;
        used.reset (cand);
      }
      map[i] = n;
      return false;
    };
    if (extend (extend, 0))
      return map;
    return std::nullopt;
  }

}
