#pragma once

// Hurwitz action on reduced reflection decompositions.
//
// A reduced decomposition of a sigma-stable divisor w of c is a tuple
// (rho_1, ..., rho_l) of C~ reflections whose right-to-left product is w and
// whose length l equals the C~ reflection length of w.  The Hurwitz move at
// position i replaces (rho_i, rho_{i+1}) by (rho_i rho_{i+1} rho_i^{-1},
// rho_i); moves preserve the product and reducedness and generate the braid
// group action whose transitivity is verified here at desk scale.
//
// Reflections attached to the infinite part of an element exist at every
// offset, so the decomposition set of such elements (including c itself) is
// infinite; enumeration and orbit search are therefore windowed and report
// truncation instead of asserting completeness.

#include "ctilde/germ.hpp"

namespace ctilde {

struct ReflectionTuple {
  std::vector<CtildeReflection> entries;
  GermElement target;

  friend bool operator==(const ReflectionTuple& a, const ReflectionTuple& b) {
    if (!(a.target.perm == b.target.perm) ||
        a.entries.size() != b.entries.size())
      return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      if (!(a.entries[i].elem.perm == b.entries[i].elem.perm)) return false;
    return true;
  }
  friend bool operator<(const ReflectionTuple& a, const ReflectionTuple& b) {
    std::vector<PeriodicPermutation> pa, pb;
    for (const auto& e : a.entries) pa.push_back(e.elem.perm);
    for (const auto& e : b.entries) pb.push_back(e.elem.perm);
    return pa < pb;
  }
};

// Assemble and validate a tuple: the right-to-left product of the entries
// must be target with lengths adding (reducedness).
inline ReflectionTuple make_tuple(const Germ& germ,
                                  std::vector<CtildeReflection> entries,
                                  const GermElement& target) {
  PeriodicPermutation prod(germ.period());
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    prod = compose(it->elem.perm, prod);
  if (!(prod == target.perm))
    throw std::invalid_argument("tuple does not multiply to its target");
  if (static_cast<Int>(entries.size()) != germ.reflection_length_c(target))
    throw std::invalid_argument("tuple is not reduced");
  return ReflectionTuple{std::move(entries), target};
}

// Hurwitz move at 1-based position i (1 <= i < length): direction +1 sends
// (x, y) to (x y x^{-1}, x), direction -1 sends it to (y, y^{-1} x y).
inline ReflectionTuple hurwitz_move(const Germ& germ, const ReflectionTuple& t,
                                    std::size_t i, int direction) {
  if (i < 1 || i >= t.entries.size())
    throw std::invalid_argument("move position out of range");
  ReflectionTuple out = t;
  const PeriodicPermutation& x = t.entries[i - 1].elem.perm;
  const PeriodicPermutation& y = t.entries[i].elem.perm;
  PeriodicPermutation conj =
      direction >= 0 ? conjugate(y, x) : conjugate(x, inverse(y));
  CtildeReflection moved =
      germ.classify_reflection_element(germ.element(conj));
  if (direction >= 0) {
    out.entries[i] = t.entries[i - 1];
    out.entries[i - 1] = std::move(moved);
  } else {
    out.entries[i - 1] = t.entries[i];
    out.entries[i] = std::move(moved);
  }
  return out;
}

// Rotation (rho_2, ..., rho_l, c^{-1} rho_1 c); lies in the Hurwitz orbit
// when the target is c.
inline ReflectionTuple rotate(const Germ& germ, const ReflectionTuple& t) {
  if (!(t.target.perm == germ.coxeter_perm()))
    throw std::invalid_argument("rotate requires target c");
  ReflectionTuple out = t;
  std::rotate(out.entries.begin(), out.entries.begin() + 1, out.entries.end());
  out.entries.back() = germ.classify_reflection_element(
      germ.garside_automorphism(t.entries.front().elem));
  return out;
}

// All reduced decompositions of w using atoms within the offset window.
// Exhaustive iff *truncated stays false (always true for finite-support w
// once the window covers its parts).
inline std::vector<ReflectionTuple> reduced_decompositions(
    const Germ& germ, const GermElement& w, Int window,
    bool* truncated = nullptr) {
  if (truncated) *truncated = false;
  std::vector<ReflectionTuple> out;
  std::vector<CtildeReflection> prefix;
  std::function<void(const GermElement&)> rec = [&](const GermElement& rest) {
    if (rest.perm.is_identity()) {
      out.push_back(ctilde::make_tuple(germ, prefix, w));
      return;
    }
    bool cut = false;
    for (const CtildeReflection& rho : germ.atoms_dividing(rest, window, &cut)) {
      prefix.push_back(rho);
      rec(germ.quotient_by_reflection(rho, rest));
      prefix.pop_back();
    }
    if (cut && truncated) *truncated = true;
  };
  rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

struct OrbitReport {
  std::vector<ReflectionTuple> tuples;
  bool capped = false;            // size cap hit
  bool window_limited = false;    // some move left the entry window
};

namespace detail {

inline std::string tuple_key(const ReflectionTuple& t) {
  std::string key;
  for (const auto& e : t.entries) {
    key += print_permutation(e.elem.perm);
    key += '|';
  }
  return key;
}

inline bool tuple_in_window(const ReflectionTuple& t, Int period, Int window) {
  for (const auto& e : t.entries)
    if (e.b > period * (window + 1)) return false;
  return true;
}

}  // namespace detail

// BFS closure of t under Hurwitz moves in both directions.  Tuples with an
// entry outside the offset window are neither kept nor expanded; the search
// also stops at the size cap.
inline OrbitReport hurwitz_orbit(const Germ& germ, const ReflectionTuple& start,
                                 Int window, std::size_t cap) {
  OrbitReport report;
  if (!detail::tuple_in_window(start, germ.period(), window))
    throw std::invalid_argument("starting tuple outside the window");
  std::set<std::string> seen{detail::tuple_key(start)};
  std::deque<ReflectionTuple> queue{start};
  report.tuples.push_back(start);
  while (!queue.empty()) {
    if (report.tuples.size() >= cap) {
      report.capped = true;
      break;
    }
    ReflectionTuple t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < t.entries.size(); ++i) {
      for (int dir : {+1, -1}) {
        ReflectionTuple next = hurwitz_move(germ, t, i, dir);
        if (!detail::tuple_in_window(next, germ.period(), window)) {
          report.window_limited = true;
          continue;
        }
        if (!seen.insert(detail::tuple_key(next)).second) continue;
        report.tuples.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(report.tuples.begin(), report.tuples.end());
  return report;
}

// ---------------------------------------------------------------------------
// Conjugation classification: every reflection dividing c is conjugate by a
// power of c to a reflection of the finite parabolic W' (supported in
// [1, 2n]) or W'' (supported in [1-n, n]).

struct ClassifiedReflection {
  Int power = 0;  // m with c^m rho c^{-m} = target
  CtildeReflection target;
  bool in_w_prime = false;
  bool in_w_second = false;
};

namespace detail {

// Can the orbit {a, b} be translated by a multiple of the period into
// [lo, lo + period - 1] entirely?
inline bool orbit_fits(Int a, Int b, Int lo, Int period) {
  Int mn = std::min(a, b), mx = std::max(a, b);
  Int j = (mn - lo) >= 0 ? (mn - lo) / period : -((lo - mn + period - 1) / period);
  mn -= j * period;
  mx -= j * period;
  return lo <= mn && mx <= lo + period - 1;
}

inline bool reflection_in_w_prime(const CtildeReflection& r, Int n) {
  if (r.is_long) return r.k == 1;
  return detail::orbit_fits(r.a, r.b, 1, 2 * n) ||
         detail::orbit_fits(1 - r.a, 1 - r.b, 1, 2 * n);
}

inline bool reflection_in_w_second(const CtildeReflection& r, Int n) {
  if (r.is_long) {
    if (r.k % 2 != 0) return false;
    // Translate the canonical orbit to sum 1 and test the window.
    Int a = r.a - r.k * n, b = r.b - r.k * n;
    return 1 - n <= std::min(a, b) && std::max(a, b) <= n;
  }
  return detail::orbit_fits(r.a, r.b, 1 - n, 2 * n) ||
         detail::orbit_fits(1 - r.a, 1 - r.b, 1 - n, 2 * n);
}

}  // namespace detail

inline ClassifiedReflection classify_reflection(const Germ& germ,
                                                const CtildeReflection& rho) {
  Int n = germ.rank();
  auto finish = [&](Int m, const CtildeReflection& target) {
    ClassifiedReflection out{m, target,
                             detail::reflection_in_w_prime(target, n),
                             detail::reflection_in_w_second(target, n)};
    if (!out.in_w_prime && !out.in_w_second)
      throw std::logic_error("classification target escaped W' and W''");
    if (!(germ.conjugate_by_coxeter_power(rho.elem, m).perm ==
          target.elem.perm))
      throw std::logic_error("classification conjugation check failed");
    return out;
  };
  if (detail::reflection_in_w_prime(rho, n) ||
      detail::reflection_in_w_second(rho, n))
    return finish(0, rho);
  Int a = rho.a, b = rho.b;
  Int m;
  if (rho.is_long) {
    // (a, 2kn+1-a) -> (kn, kn+1): move the odd entry onto the odd target.
    Int u = (a % 2 != 0) ? a : b;
    Int kn = rho.k * n;
    Int t_odd = (kn % 2 != 0) ? kn : kn + 1;
    m = (t_odd - u) / 2;
  } else if ((a + b) % 2 == 0) {
    // Same parity: normalize to the odd orbit (a', b'), then
    // (a', b')(1-a', 1-b') -> (1, b'+1-a')(0, a'-b').
    Int a1 = (a % 2 != 0) ? a : 1 - b;
    m = (1 - a1) / 2;
  } else {
    // Different parity: -> ((a+b-1)/2, (a+b+1)/2); the odd entry lands on
    // the odd member of the consecutive pair.
    Int u = (a % 2 != 0) ? a : b;
    Int x = (a + b - 1) / 2;
    Int t_odd = (x % 2 != 0) ? x : x + 1;
    m = (t_odd - u) / 2;
  }
  CtildeReflection target = germ.classify_reflection_element(
      germ.conjugate_by_coxeter_power(rho.elem, m));
  return finish(m, target);
}

}  // namespace ctilde
