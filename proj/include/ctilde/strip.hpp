#pragma once

// The strip model behind non-crossing periodic permutations.
//
// Fix a period N and a partition of the residue classes into two sets X and
// Xi, with X nonempty.  Draw the integers of X on one boundary line of a
// horizontal strip, increasing to the right, and the integers of Xi on the
// other boundary line, increasing to the LEFT.  Reading the whole boundary
// gives a linear order: all of X in ascending order, then all of Xi in
// descending order.  A subset of Z is drawn by joining its points inside the
// strip; two subsets cross when they cannot be drawn disjointly, which is a
// purely combinatorial condition on the boundary order:
//
//   * two finite sets cross iff some translate by a multiple of N of one of
//     them meets the other or interleaves with it (contains points a < b <
//     a' < b' alternating in the boundary order);
//   * a finite set crosses a periodic set (a union of residue classes) iff
//     they meet or some point of the periodic set lies strictly between two
//     points of the finite set in the boundary order (the periodic set is
//     unbounded at both ends of the strip, so one point in between forces an
//     alternation);
//   * two distinct periodic sets cross iff they meet or both contain points
//     of X, or both contain points of Xi (two disjoint periodic subsets of
//     the same boundary line always interleave).
//
// The degenerate split Xi = {} (a single boundary line) is allowed; it is
// used for the finite type C germ.

#include <cstdlib>
#include <set>
#include <utility>

#include "ctilde/periodic_perm.hpp"

namespace ctilde {

class Strip {
 public:
  // X = classes of the given residues, Xi = the rest.
  Strip(Int period, const std::vector<Int>& x_residues)
      : period_(period), in_x_(period, false) {
    if (period < 1) throw std::invalid_argument("period must be positive");
    for (Int r : x_residues) in_x_[mod1(r, period) - 1] = true;
    if (std::none_of(in_x_.begin(), in_x_.end(), [](bool b) { return b; }))
      throw std::invalid_argument("X must be nonempty");
  }

  // Odd residues on X, even residues on Xi; period must be even.  This is
  // the split used for the type C~ germ.
  static Strip odd_even(Int period) {
    if (period % 2 != 0)
      throw std::invalid_argument("odd/even split needs an even period");
    std::vector<Int> odds;
    for (Int r = 1; r <= period; r += 2) odds.push_back(r);
    return Strip(period, odds);
  }

  // Everything on one line (Xi empty); used for the type C germ.
  static Strip one_line(Int period) {
    std::vector<Int> all(period);
    std::iota(all.begin(), all.end(), Int{1});
    return Strip(period, all);
  }

  Int period() const { return period_; }
  bool in_x(Int v) const { return in_x_[mod1(v, period_) - 1]; }
  bool two_line() const {
    return std::any_of(in_x_.begin(), in_x_.end(), [](bool b) { return !b; });
  }
  bool is_odd_even() const {
    if (period_ % 2 != 0) return false;
    for (Int r = 1; r <= period_; ++r)
      if (in_x(r) != (r % 2 != 0)) return false;
    return true;
  }

  std::vector<Int> x_residues() const {
    std::vector<Int> xs;
    for (Int r = 1; r <= period_; ++r)
      if (in_x_[r - 1]) xs.push_back(r);
    return xs;
  }
  std::vector<Int> xi_residues() const {
    std::vector<Int> xis;
    for (Int r = 1; r <= period_; ++r)
      if (!in_x_[r - 1]) xis.push_back(r);
    return xis;
  }

  // Key realizing the boundary order: all of X ascending, then all of Xi
  // descending.
  std::pair<int, Int> boundary_key(Int v) const {
    return in_x(v) ? std::pair<int, Int>{0, v} : std::pair<int, Int>{1, -v};
  }
  bool boundary_less(Int a, Int b) const { return boundary_key(a) < boundary_key(b); }

  // The dual Coxeter element of the strip: each point of X moves to the next
  // point of X to the right, each point of Xi to the next point of Xi to the
  // left.  For the odd/even split this is the map odd i -> i+2, even i ->
  // i-2; for the one-line split it is i -> i+1.
  PeriodicPermutation coxeter() const {
    std::vector<Int> win(period_);
    std::vector<Int> xs = x_residues(), xis = xi_residues();
    auto next_in = [&](const std::vector<Int>& line, Int v) {
      auto it = std::upper_bound(line.begin(), line.end(), v);
      return it == line.end() ? line.front() + period_ : *it;
    };
    auto prev_in = [&](const std::vector<Int>& line, Int v) {
      auto it = std::lower_bound(line.begin(), line.end(), v);
      return it == line.begin() ? line.back() - period_ : *std::prev(it);
    };
    for (Int i = 1; i <= period_; ++i)
      win[i - 1] = in_x(i) ? next_in(xs, i) : prev_in(xis, i);
    return PeriodicPermutation(period_, std::move(win));
  }

  friend bool operator==(const Strip&, const Strip&) = default;

 private:
  Int period_;
  std::vector<bool> in_x_;
};

namespace detail {

// True iff the merged boundary-order sequence of A and B alternates
// A...B...A...B somewhere (at least four alternation blocks).  The sets are
// assumed disjoint.
inline bool interleaves(const Strip& strip, const std::vector<Int>& a,
                        const std::vector<Int>& b) {
  struct Tagged {
    std::pair<int, Int> key;
    bool from_a;
  };
  std::vector<Tagged> all;
  all.reserve(a.size() + b.size());
  for (Int v : a) all.push_back({strip.boundary_key(v), true});
  for (Int v : b) all.push_back({strip.boundary_key(v), false});
  std::sort(all.begin(), all.end(),
            [](const Tagged& l, const Tagged& r) { return l.key < r.key; });
  int blocks = 0;
  bool last = false;
  for (const Tagged& t : all) {
    if (blocks == 0 || t.from_a != last) {
      ++blocks;
      last = t.from_a;
    }
    if (blocks >= 4) return true;
  }
  return false;
}

inline bool finite_sets_meet(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::set<Int> sa(a.begin(), a.end());
  for (Int v : b)
    if (sa.count(v)) return true;
  return false;
}

inline Int span(const std::vector<Int>& a) {
  auto [mn, mx] = std::minmax_element(a.begin(), a.end());
  return *mx - *mn;
}

}  // namespace detail

// Crossing of two finite subsets of Z, each given by at least one element:
// true iff some N-translate of b meets or interleaves a.
inline bool finite_sets_cross(const Strip& strip, const std::vector<Int>& a,
                              const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return false;
  Int n = strip.period();
  Int reach = (detail::span(a) + detail::span(b)) / n + 2;
  for (Int m = -reach; m <= reach; ++m) {
    std::vector<Int> bt(b);
    for (Int& v : bt) v += m * n;
    if (detail::finite_sets_meet(a, bt)) return true;
    if (detail::interleaves(strip, a, bt)) return true;
  }
  return false;
}

// Crossing of a finite set with a union of residue classes.
inline bool finite_crosses_periodic(const Strip& strip, const std::vector<Int>& a,
                                    const std::vector<Int>& residues) {
  if (a.empty() || residues.empty()) return false;
  Int n = strip.period();
  std::vector<bool> in_b(n, false);
  for (Int r : residues) in_b[mod1(r, n) - 1] = true;
  for (Int v : a)
    if (in_b[mod1(v, n) - 1]) return true;
  if (a.size() < 2) return false;
  // A point of the periodic set strictly between the boundary extremes of a
  // forces a crossing (the periodic set is unbounded past both extremes).
  Int lo = *std::min_element(a.begin(), a.end(), [&](Int l, Int r) {
    return strip.boundary_less(l, r);
  });
  Int hi = *std::max_element(a.begin(), a.end(), [&](Int l, Int r) {
    return strip.boundary_less(l, r);
  });
  bool lo_x = strip.in_x(lo), hi_x = strip.in_x(hi);
  if (lo_x != hi_x) return true;  // a spans both lines; periodic sets pass through
  if (lo_x) {
    // All of a lies on X; only X points of the periodic set can fall in the
    // open interval (lo, hi), everything on Xi comes after hi.
    for (Int v = lo + 1; v < hi; ++v)
      if (strip.in_x(v) && in_b[mod1(v, n) - 1]) return true;
    return false;
  }
  // Both extremes on Xi: boundary order is reversed there.
  for (Int v = hi + 1; v < lo; ++v)
    if (!strip.in_x(v) && in_b[mod1(v, n) - 1]) return true;
  return false;
}

// Crossing of two distinct unions of residue classes: they cross iff they
// meet or share a boundary line.
inline bool periodic_sets_cross(const Strip& strip, const std::vector<Int>& ra,
                                const std::vector<Int>& rb) {
  if (ra.empty() || rb.empty()) return false;
  Int n = strip.period();
  std::vector<bool> in_a(n, false);
  for (Int r : ra) in_a[mod1(r, n) - 1] = true;
  bool a_meets_x = false, a_meets_xi = false;
  for (Int r = 1; r <= n; ++r)
    if (in_a[r - 1]) (strip.in_x(r) ? a_meets_x : a_meets_xi) = true;
  for (Int r : rb) {
    Int rr = mod1(r, n);
    if (in_a[rr - 1]) return true;
    if (strip.in_x(rr) ? a_meets_x : a_meets_xi) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Positive self-non-crossing cycles.
//
// A finite cycle is positive self-non-crossing when its orbit, split into X
// entries a_1 < ... < a_k (with a_k < a_1 + N) and Xi entries
// b_1 > ... > b_l (with b_l > b_1 - N), is traversed in exactly the order
// a_1, ..., a_k, b_1, ..., b_l.  An infinite cycle qualifies when it lies on
// a single line with shift +-1 toward that line's drift: entries in X
// ascending with shift +1, or entries in Xi descending with shift -1.

inline bool is_positive_cycle(const Strip& strip, const Cycle& cyc,
                              const PeriodicPermutation& w,
                              std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = "cycle " + print_cycles({cyc}) + ": " + msg;
    return false;
  };
  Int n = strip.period();
  if (cyc.finite()) {
    std::vector<Int> xs, xis;
    for (Int e : cyc.entries) (strip.in_x(e) ? xs : xis).push_back(e);
    std::sort(xs.begin(), xs.end());
    std::sort(xis.begin(), xis.end(), std::greater<Int>());
    if (!xs.empty() && xs.back() >= xs.front() + n)
      return fail("X entries do not fit in one period");
    if (!xis.empty() && xis.back() <= xis.front() - n)
      return fail("Xi entries do not fit in one period");
    std::vector<Int> expected(xs);
    expected.insert(expected.end(), xis.begin(), xis.end());
    for (std::size_t j = 0; j < expected.size(); ++j) {
      Int from = expected[j];
      Int to = expected[(j + 1) % expected.size()];
      if (w(from) != to)
        return fail("entries are not visited in boundary order");
    }
    return true;
  }
  if (cyc.shift != 1 && cyc.shift != -1)
    return fail("infinite cycle has shift other than +1 or -1");
  bool want_x = cyc.shift == 1;
  for (Int e : cyc.entries)
    if (strip.in_x(e) != want_x)
      return fail(want_x ? "shift +1 cycle must lie in X"
                         : "shift -1 cycle must lie in Xi");
  std::vector<Int> sorted(cyc.entries);
  if (want_x) {
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= sorted.front() + n)
      return fail("X entries do not fit in one period");
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j)
      if (w(sorted[j]) != sorted[j + 1])
        return fail("entries are not visited in ascending order");
    if (w(sorted.back()) != sorted.front() + n)
      return fail("entries are not visited in ascending order");
  } else {
    std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
    if (sorted.back() <= sorted.front() - n)
      return fail("Xi entries do not fit in one period");
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j)
      if (w(sorted[j]) != sorted[j + 1])
        return fail("entries are not visited in descending order");
    if (w(sorted.back()) != sorted.front() - n)
      return fail("entries are not visited in descending order");
  }
  return true;
}

}  // namespace ctilde
