#pragma once

// Periodic non-crossing partitions of Z.
//
// A periodic partition consists of finitely many classes of finite parts
// (each part acting together with all its N-translates) plus at most one
// infinite part that is a union of residue classes.  Parts not listed are
// singletons.  A partition is non-crossing for a strip when its parts are
// pairwise non-crossing, including each finite part against its own
// translates.
//
// Non-crossing periodic permutations w correspond bijectively to their orbit
// partitions p_w; under that bijection left/right division becomes
// refinement of partitions, the meet is the common refinement and the join
// is computed by repeatedly merging crossing parts (tracking the relative
// N-translate offsets; an offset conflict means the merged part is invariant
// under a translation and hence infinite).

#include <map>
#include <set>

#include "ctilde/strip.hpp"

namespace ctilde {

struct PeriodicPartition {
  Int period = 1;
  // Finite part classes: each sorted ascending, minimal element in [1, N],
  // entries pairwise distinct mod N; the list is sorted for canonicity.
  std::vector<std::vector<Int>> finite_parts;
  // Residues (in [1, N], sorted) of the infinite part, empty if none.
  std::vector<Int> infinite_residues;

  bool has_infinite() const { return !infinite_residues.empty(); }
  friend bool operator==(const PeriodicPartition&,
                         const PeriodicPartition&) = default;
};

namespace detail {

inline std::vector<Int> canonical_part(std::vector<Int> part, Int n) {
  std::sort(part.begin(), part.end());
  Int t = part.front() - mod1(part.front(), n);
  for (Int& v : part) v -= t;
  return part;
}

}  // namespace detail

// Build a partition from raw parts (any translates, any order).  Parts of
// size < 2 are dropped; residue sets are normalized.
inline PeriodicPartition make_partition(Int period,
                                        std::vector<std::vector<Int>> finite_parts,
                                        std::vector<Int> infinite_residues = {}) {
  PeriodicPartition p;
  p.period = period;
  for (auto& part : finite_parts) {
    if (part.size() < 2) continue;
    auto canon = detail::canonical_part(std::move(part), period);
    std::set<Int> residues;
    for (Int v : canon) residues.insert(mod1(v, period));
    if (residues.size() != canon.size())
      throw std::invalid_argument("part entries collide modulo the period");
    p.finite_parts.push_back(std::move(canon));
  }
  std::sort(p.finite_parts.begin(), p.finite_parts.end());
  p.finite_parts.erase(
      std::unique(p.finite_parts.begin(), p.finite_parts.end()),
      p.finite_parts.end());
  std::set<Int> res;
  for (Int r : infinite_residues) res.insert(mod1(r, period));
  p.infinite_residues.assign(res.begin(), res.end());
  return p;
}

inline PeriodicPartition trivial_partition(Int period) {
  return make_partition(period, {});
}

// One part containing everything: the orbit partition of the Coxeter element.
inline PeriodicPartition full_partition(Int period) {
  std::vector<Int> all(period);
  std::iota(all.begin(), all.end(), Int{1});
  return make_partition(period, {}, all);
}

// Mutual disjointness of all parts (finite parts against their own and each
// other's translates, and against the infinite part).
inline bool partition_parts_disjoint(const PeriodicPartition& p) {
  std::vector<int> owner(p.period, -1);
  int id = 0;
  for (const auto& part : p.finite_parts) {
    for (Int v : part) {
      Int r = mod1(v, p.period);
      if (owner[r - 1] != -1) return false;
      owner[r - 1] = id;
    }
    ++id;
  }
  for (Int r : p.infinite_residues)
    if (owner[r - 1] != -1) return false;
  return true;
}

// Pairwise non-crossing check for all parts of p with respect to the strip.
inline bool partition_noncrossing(const Strip& strip, const PeriodicPartition& p,
                                  std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!partition_parts_disjoint(p)) return fail("parts are not disjoint");
  Int n = p.period;
  const auto& parts = p.finite_parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // Against own nonzero translates: meeting is excluded by disjointness of
    // residues, so only interleaving matters.
    Int reach = 2 * detail::span(parts[i]) / n + 2;
    for (Int m = 1; m <= reach; ++m) {
      std::vector<Int> t(parts[i]);
      for (Int& v : t) v += m * n;
      if (detail::interleaves(strip, parts[i], t))
        return fail("part crosses its own translate");
    }
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (finite_sets_cross(strip, parts[i], parts[j]))
        return fail("two finite parts cross");
    if (p.has_infinite() &&
        finite_crosses_periodic(strip, parts[i], p.infinite_residues))
      return fail("a finite part crosses the infinite part");
  }
  return true;
}

// sigma image of a partition (parts mapped through i -> 1 - i).
inline PeriodicPartition sigma(const PeriodicPartition& p) {
  std::vector<std::vector<Int>> parts;
  for (const auto& part : p.finite_parts) {
    std::vector<Int> img;
    for (Int v : part) img.push_back(1 - v);
    parts.push_back(std::move(img));
  }
  std::vector<Int> res;
  for (Int r : p.infinite_residues) res.push_back(1 - r);
  return make_partition(p.period, std::move(parts), std::move(res));
}

// Orbit partition p_w of a permutation: finite orbits become finite parts,
// the residues of all infinite cycles together form the infinite part.
inline PeriodicPartition partition_of(const PeriodicPermutation& w) {
  std::vector<std::vector<Int>> parts;
  std::vector<Int> inf;
  for (const Cycle& c : cycle_decomposition(w)) {
    if (c.finite())
      parts.push_back(c.entries);
    else
      for (Int e : c.entries) inf.push_back(mod1(e, w.period()));
  }
  return make_partition(w.period(), std::move(parts), std::move(inf));
}

// The non-crossing permutation whose orbit partition is p: each finite part
// is traversed in boundary order (X ascending then Xi descending), the X
// residues of the infinite part form a shift +1 cycle and its Xi residues a
// shift -1 cycle.  Throws if p is crossing or if a two-line strip gets an
// infinite part on a single line (no such non-crossing permutation exists
// with total shift zero).
inline PeriodicPermutation element_of(const Strip& strip,
                                      const PeriodicPartition& p) {
  std::string why;
  if (!partition_noncrossing(strip, p, &why))
    throw std::invalid_argument("partition is crossing: " + why);
  Int n = p.period;
  CycleDecomposition cycles;
  for (const auto& part : p.finite_parts) {
    std::vector<Int> xs, xis;
    for (Int v : part) (strip.in_x(v) ? xs : xis).push_back(v);
    std::sort(xs.begin(), xs.end());
    std::sort(xis.begin(), xis.end(), std::greater<Int>());
    if (!xs.empty() && xs.back() >= xs.front() + n)
      throw std::invalid_argument("part X entries do not fit in one period");
    if (!xis.empty() && xis.back() <= xis.front() - n)
      throw std::invalid_argument("part Xi entries do not fit in one period");
    Cycle c;
    c.entries = xs;
    c.entries.insert(c.entries.end(), xis.begin(), xis.end());
    cycles.push_back(std::move(c));
  }
  if (p.has_infinite()) {
    std::vector<Int> xs, xis;
    for (Int r : p.infinite_residues) (strip.in_x(r) ? xs : xis).push_back(r);
    if (strip.two_line() && (xs.empty() || xis.empty()))
      throw std::invalid_argument(
          "infinite part must meet both boundary lines of a two-line strip");
    if (!xs.empty()) {
      std::sort(xs.begin(), xs.end());
      cycles.push_back(Cycle{std::move(xs), 1});
    }
    if (!xis.empty()) {
      std::sort(xis.begin(), xis.end(), std::greater<Int>());
      cycles.push_back(Cycle{std::move(xis), -1});
    }
  }
  return from_cycles(n, cycles);
}

// ---------------------------------------------------------------------------
// Refinement order

// True iff every part of p is contained in a part of q (up to translates).
inline bool refines(const PeriodicPartition& p, const PeriodicPartition& q) {
  if (p.period != q.period)
    throw std::invalid_argument("partitions have different periods");
  Int n = p.period;
  std::vector<bool> q_inf(n, false);
  for (Int r : q.infinite_residues) q_inf[r - 1] = true;
  for (const auto& part : p.finite_parts) {
    bool inside_inf = std::all_of(part.begin(), part.end(), [&](Int v) {
      return q_inf[mod1(v, n) - 1];
    });
    if (inside_inf) continue;
    bool found = false;
    for (const auto& qpart : q.finite_parts) {
      // part must embed in some translate of qpart; anchor on the first entry.
      std::set<Int> qset(qpart.begin(), qpart.end());
      for (Int anchor : qpart) {
        Int off = anchor - part.front();
        if (off % n != 0) continue;
        bool all = std::all_of(part.begin(), part.end(),
                               [&](Int v) { return qset.count(v + off) > 0; });
        if (all) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  for (Int r : p.infinite_residues)
    if (!q_inf[r - 1]) return false;
  return true;
}

// Common refinement (the meet): intersections of parts.
inline PeriodicPartition common_refinement(const PeriodicPartition& p,
                                           const PeriodicPartition& q) {
  if (p.period != q.period)
    throw std::invalid_argument("partitions have different periods");
  Int n = p.period;
  std::vector<std::vector<Int>> parts;
  std::vector<bool> p_inf(n, false), q_inf(n, false);
  for (Int r : p.infinite_residues) p_inf[r - 1] = true;
  for (Int r : q.infinite_residues) q_inf[r - 1] = true;
  for (const auto& a : p.finite_parts) {
    for (const auto& b : q.finite_parts) {
      Int reach = (detail::span(a) + detail::span(b)) / n + 1;
      for (Int m = -reach; m <= reach; ++m) {
        std::vector<Int> inter;
        std::set<Int> bset;
        for (Int v : b) bset.insert(v + m * n);
        for (Int v : a)
          if (bset.count(v)) inter.push_back(v);
        if (inter.size() >= 2) parts.push_back(std::move(inter));
      }
    }
    std::vector<Int> inter;
    for (Int v : a)
      if (q_inf[mod1(v, n) - 1]) inter.push_back(v);
    if (inter.size() >= 2) parts.push_back(std::move(inter));
  }
  for (const auto& b : q.finite_parts) {
    std::vector<Int> inter;
    for (Int v : b)
      if (p_inf[mod1(v, n) - 1]) inter.push_back(v);
    if (inter.size() >= 2) parts.push_back(std::move(inter));
  }
  std::vector<Int> res;
  for (Int r = 1; r <= n; ++r)
    if (p_inf[r - 1] && q_inf[r - 1]) res.push_back(r);
  return make_partition(n, std::move(parts), std::move(res));
}

// ---------------------------------------------------------------------------
// Join

namespace detail {

// Union-find over part indices with translate offsets: off[i] is the
// N-offset of node i relative to its parent, so that aligning every member
// of a component by its accumulated offset reconstructs the merged part.  A
// cycle with inconsistent offsets marks the component as periodic, i.e.
// invariant under a nonzero translation and therefore infinite.
class OffsetDsu {
 public:
  explicit OffsetDsu(std::size_t size)
      : parent_(size), off_(size, 0), periodic_(size, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // Returns {root, offset of i relative to root}.
  std::pair<std::size_t, Int> find(std::size_t i) {
    if (parent_[i] == i) return {i, 0};
    auto [root, off] = find(parent_[i]);
    parent_[i] = root;
    off_[i] += off;
    return {root, off_[i]};
  }

  // Declare that part j translated by m belongs with part i.  Returns true
  // if the structure changed.
  bool unite(std::size_t i, std::size_t j, Int m) {
    auto [ri, oi] = find(i);
    auto [rj, oj] = find(j);
    if (ri == rj) {
      // j sits at offset oj; the new relation wants it at oi + m.
      if (oj != oi + m && !periodic_[ri]) {
        periodic_[ri] = true;
        return true;
      }
      return false;
    }
    parent_[rj] = ri;
    off_[rj] = oi + m - oj;
    periodic_[ri] = periodic_[ri] || periodic_[rj];
    return true;
  }

  bool mark_periodic(std::size_t i) {
    auto [root, off] = find(i);
    (void)off;
    if (periodic_[root]) return false;
    periodic_[root] = true;
    return true;
  }

  bool is_periodic(std::size_t i) { return periodic_[find(i).first]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Int> off_;
  std::vector<bool> periodic_;
};

struct JoinNode {
  std::vector<Int> elems;     // finite part (empty if infinite)
  std::vector<Int> residues;  // infinite part (empty if finite)
  bool infinite() const { return !residues.empty(); }
};

// One merging pass; returns the coarsened partition and whether anything
// merged.
inline std::pair<PeriodicPartition, bool> join_pass(
    const Strip& strip, const std::vector<JoinNode>& nodes) {
  Int n = strip.period();
  OffsetDsu dsu(nodes.size());
  bool changed = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i; j < nodes.size(); ++j) {
      const JoinNode& a = nodes[i];
      const JoinNode& b = nodes[j];
      if (a.infinite() && b.infinite()) {
        if (i != j && periodic_sets_cross(strip, a.residues, b.residues))
          changed |= dsu.unite(i, j, 0);
      } else if (a.infinite() || b.infinite()) {
        const auto& fin = a.infinite() ? b.elems : a.elems;
        const auto& res = a.infinite() ? a.residues : b.residues;
        if (finite_crosses_periodic(strip, fin, res)) changed |= dsu.unite(i, j, 0);
      } else {
        Int reach = (span(a.elems) + span(b.elems)) / n + 2;
        for (Int m = -reach; m <= reach; ++m) {
          if (i == j && m == 0) continue;
          std::vector<Int> bt(b.elems);
          for (Int& v : bt) v += m * n;
          if (finite_sets_meet(a.elems, bt) || interleaves(strip, a.elems, bt)) {
            if (i == j)
              changed |= dsu.mark_periodic(i);
            else
              changed |= dsu.unite(i, j, m);
          }
        }
      }
    }
  }
  // Rebuild parts per component.  All infinite components are pooled into
  // the single infinite part: two non-crossing infinite parts would lie on
  // opposite boundary lines, and the minimal sigma-stable coarsening (the
  // only consumer of multi-infinite joins) unites exactly those.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Int>>> comps;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [root, off] = dsu.find(i);
    comps[root].push_back({i, off});
  }
  std::vector<std::vector<Int>> parts;
  std::set<Int> inf;
  for (auto& [root, members] : comps) {
    bool infinite = dsu.is_periodic(root) ||
                    std::any_of(members.begin(), members.end(),
                                [&](auto& m) { return nodes[m.first].infinite(); });
    if (!infinite) {
      std::vector<Int> merged;
      for (auto& [idx, off] : members)
        for (Int v : nodes[idx].elems) merged.push_back(v + off * n);
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      // A repeated residue at different offsets means the merged part chains
      // with its own translates; its closure is periodic.
      std::set<Int> residues;
      for (Int v : merged) residues.insert(mod1(v, n));
      if (residues.size() == merged.size()) {
        parts.push_back(std::move(merged));
        continue;
      }
      infinite = true;
    }
    for (auto& [idx, off] : members) {
      for (Int v : nodes[idx].elems) inf.insert(mod1(v, n));
      for (Int r : nodes[idx].residues) inf.insert(r);
    }
  }
  return {make_partition(n, std::move(parts),
                         std::vector<Int>(inf.begin(), inf.end())),
          changed};
}

inline std::vector<JoinNode> nodes_of(const PeriodicPartition& p) {
  std::vector<JoinNode> nodes;
  for (const auto& part : p.finite_parts) nodes.push_back({part, {}});
  if (p.has_infinite()) nodes.push_back({{}, p.infinite_residues});
  return nodes;
}

}  // namespace detail

// Join of two non-crossing partitions: the finest non-crossing partition
// coarser than both.  For sigma-stable inputs on the odd/even strip the
// result is again sigma-stable; when the merging process stabilizes with two
// infinite parts (one per boundary line) they are united, matching the
// minimal sigma-stable coarsening.
inline PeriodicPartition noncrossing_join(const Strip& strip,
                                          const PeriodicPartition& p,
                                          const PeriodicPartition& q) {
  if (p.period != q.period || p.period != strip.period())
    throw std::invalid_argument("period mismatch in join");
  std::vector<detail::JoinNode> nodes = detail::nodes_of(p);
  for (auto& node : detail::nodes_of(q)) nodes.push_back(std::move(node));
  PeriodicPartition cur;
  for (;;) {
    auto [next, changed] = detail::join_pass(strip, nodes);
    cur = std::move(next);
    if (!changed) break;
    nodes = detail::nodes_of(cur);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Text format: finite parts as "{1,2,3}" separated by spaces, the infinite
// part as "inf:{1,4}" after a "|"; the all-singleton partition prints "{}".

inline std::string print_partition(const PeriodicPartition& p) {
  std::string out;
  for (const auto& part : p.finite_parts) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(part[j]);
    }
    out += '}';
  }
  if (p.has_infinite()) {
    if (!out.empty()) out += ' ';
    out += "| inf:{";
    for (std::size_t j = 0; j < p.infinite_residues.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p.infinite_residues[j]);
    }
    out += '}';
  }
  if (out.empty()) out = "{}";
  return out;
}

inline PeriodicPartition parse_partition(const std::string& text, Int period) {
  std::vector<std::vector<Int>> parts;
  std::vector<Int> inf;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_set = [&]() -> std::vector<Int> {
    if (i >= text.size() || text[i] != '{')
      throw ParseError("expected '{' at position " + std::to_string(i));
    ++i;
    std::vector<Int> vals;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
      ++i;
      return vals;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start)
        throw ParseError("expected integer at position " + std::to_string(i));
      vals.push_back(std::stoll(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        return vals;
      }
      throw ParseError("expected ',' or '}' at position " + std::to_string(i));
    }
  };
  skip_ws();
  bool saw_bar = false;
  while (i < text.size()) {
    if (text[i] == '|') {
      ++i;
      skip_ws();
      saw_bar = true;
      continue;
    }
    if (text.compare(i, 4, "inf:") == 0) {
      if (!saw_bar)
        throw ParseError("infinite part must follow '|'");
      i += 4;
      skip_ws();
      inf = parse_set();
    } else {
      auto part = parse_set();
      if (!part.empty()) parts.push_back(std::move(part));
    }
    skip_ws();
  }
  return make_partition(period, std::move(parts), std::move(inf));
}

}  // namespace ctilde
