#pragma once

// Periodic permutations of the integers.
//
// A permutation w of Z is N-periodic if w(i + N) = w(i) + N for all i.  Such
// a permutation is determined by its window, the images w(1), ..., w(N); the
// images of one residue system determine everything else by periodicity.
// Composition is right-to-left: (w * v)(i) = w(v(i)).
//
// Periodic permutations decompose into cycles.  A cycle is the restriction of
// w to the orbit of a residue class: starting from a and applying w until the
// starting residue recurs after k steps yields entries (a_1, ..., a_k) with
// w(a_j) = a_{j+1} and w(a_k) = a_1 + N*h for an integer h, the shift of the
// cycle.  For h = 0 the orbit is finite and the cycle is an ordinary cycle on
// k integers (acting simultaneously on all its translates).  For h != 0 the
// orbit is infinite and the cycle is written (a_1, ..., a_k)[h]; it consists
// of |h| Z-orbits but is a single orbit of residue classes.
//
// The total shift of w is (1/N) * sum_{i=1..N} (w(i) - i); it is additive
// under composition and zero exactly on the affine symmetric group.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctilde {

using Int = long long;

// Input text that does not match a documented grammar.  Semantic failures
// (non-bijective windows, crossing cycles, ...) use plain invalid_argument.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Representative of i in [1, N].
inline Int mod1(Int i, Int n) {
  Int r = i % n;
  if (r <= 0) r += n;
  return r;
}

class PeriodicPermutation {
 public:
  // Identity permutation of the given period.
  explicit PeriodicPermutation(Int period)
      : period_(check_period(period)), window_(period) {
    std::iota(window_.begin(), window_.end(), Int{1});
  }

  // Permutation with window images w(1), ..., w(N).  The images must be
  // pairwise distinct modulo the period.
  PeriodicPermutation(Int period, std::vector<Int> window)
      : period_(check_period(period)), window_(std::move(window)) {
    if (static_cast<Int>(window_.size()) != period_)
      throw std::invalid_argument("window size does not match period");
    std::vector<bool> seen(period_, false);
    for (Int img : window_) {
      Int r = mod1(img, period_);
      if (seen[r - 1])
        throw std::invalid_argument("window images collide modulo the period");
      seen[r - 1] = true;
    }
  }

  Int period() const { return period_; }
  const std::vector<Int>& window() const { return window_; }

  Int operator()(Int i) const {
    Int r = mod1(i, period_);
    return window_[r - 1] + (i - r);
  }

  bool is_identity() const {
    for (Int i = 1; i <= period_; ++i)
      if (window_[i - 1] != i) return false;
    return true;
  }

  friend bool operator==(const PeriodicPermutation&,
                         const PeriodicPermutation&) = default;
  friend bool operator<(const PeriodicPermutation& a,
                        const PeriodicPermutation& b) {
    if (a.period_ != b.period_) return a.period_ < b.period_;
    return a.window_ < b.window_;
  }

 private:
  static Int check_period(Int period) {
    if (period < 1) throw std::invalid_argument("period must be positive");
    return period;
  }

  Int period_;
  std::vector<Int> window_;
};

// (w * v)(i) = w(v(i)): v acts first.
inline PeriodicPermutation compose(const PeriodicPermutation& w,
                                   const PeriodicPermutation& v) {
  if (w.period() != v.period())
    throw std::invalid_argument("cannot compose permutations of different periods");
  std::vector<Int> win(w.period());
  for (Int i = 1; i <= w.period(); ++i) win[i - 1] = w(v(i));
  return PeriodicPermutation(w.period(), std::move(win));
}

inline PeriodicPermutation inverse(const PeriodicPermutation& w) {
  Int n = w.period();
  std::vector<Int> win(n);
  for (Int i = 1; i <= n; ++i) {
    Int j = w(i);
    Int r = mod1(j, n);
    win[r - 1] = i - (j - r);
  }
  return PeriodicPermutation(n, std::move(win));
}

// Conjugate: (w^g)(i) = g(w(g^{-1}(i))).
inline PeriodicPermutation conjugate(const PeriodicPermutation& w,
                                     const PeriodicPermutation& g) {
  return compose(g, compose(w, inverse(g)));
}

// Total shift (1/N) * sum (w(i) - i); additive under composition.
inline Int total_shift(const PeriodicPermutation& w) {
  Int s = 0;
  for (Int i = 1; i <= w.period(); ++i) s += w(i) - i;
  return s / w.period();
}

// sigma(w) = s w s where s is the involution i -> 1 - i of Z, so
// sigma(w)(i) = 1 - w(1 - i).  sigma is an automorphism of the group of
// periodic permutations and an involution.
inline PeriodicPermutation sigma(const PeriodicPermutation& w) {
  Int n = w.period();
  std::vector<Int> win(n);
  for (Int i = 1; i <= n; ++i) win[i - 1] = 1 - w(1 - i);
  return PeriodicPermutation(n, std::move(win));
}

// The periodic transposition exchanging a + kN and b + kN for all k.
// Requires a != b mod N.
inline PeriodicPermutation periodic_transposition(Int period, Int a, Int b) {
  if (mod1(a, period) == mod1(b, period))
    throw std::invalid_argument("transposition entries collide modulo the period");
  PeriodicPermutation id(period);
  std::vector<Int> win = id.window();
  Int ra = mod1(a, period), rb = mod1(b, period);
  win[ra - 1] = b - (a - ra);
  win[rb - 1] = a - (b - rb);
  return PeriodicPermutation(period, std::move(win));
}

// Simple transposition s_i = (i, i+1) of the given period.
inline PeriodicPermutation simple_transposition(Int period, Int i) {
  return periodic_transposition(period, i, i + 1);
}

// The dual Coxeter element c of period 2n: odd i -> i + 2, even i -> i - 2.
// Equals the product s_2 s_4 ... s_{2n} * s_1 s_3 ... s_{2n-1}.
inline PeriodicPermutation coxeter_element(Int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<Int> win(2 * n);
  for (Int i = 1; i <= 2 * n; ++i) win[i - 1] = (i % 2 != 0) ? i + 2 : i - 2;
  return PeriodicPermutation(2 * n, std::move(win));
}

// ---------------------------------------------------------------------------
// Cycles

struct Cycle {
  std::vector<Int> entries;  // consecutive images: w(entries[j]) = entries[j+1]
  Int shift = 0;             // w(entries.back()) = entries.front() + N*shift

  bool finite() const { return shift == 0; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

using CycleDecomposition = std::vector<Cycle>;

namespace detail {

// Canonical form of a traced finite orbit: translate so the minimum lies in
// [1, N], then rotate so the tuple starts at the minimum.
inline Cycle canonical_finite_cycle(std::vector<Int> entries, Int period) {
  Int m = *std::min_element(entries.begin(), entries.end());
  Int t = m - mod1(m, period);
  for (Int& e : entries) e -= t;
  auto it = std::min_element(entries.begin(), entries.end());
  std::rotate(entries.begin(), it, entries.end());
  return Cycle{std::move(entries), 0};
}

}  // namespace detail

// Cycle decomposition of w.  Finite cycles are listed with their minimal
// entry (taken in [1, N]) first.  An infinite cycle is listed starting from
// the window representative that keeps every entry inside [1, N] when such a
// start exists (it is then unique), otherwise from the smallest window
// representative.  Cycles are ordered by decreasing shift, then by first
// entry; cycles of length one with shift zero (fixed classes) are omitted.
inline CycleDecomposition cycle_decomposition(const PeriodicPermutation& w) {
  Int n = w.period();
  std::vector<bool> visited(n, false);
  CycleDecomposition cycles;
  for (Int r = 1; r <= n; ++r) {
    if (visited[r - 1]) continue;
    std::vector<Int> trace{r};
    visited[r - 1] = true;
    Int v = w(r);
    while (mod1(v, n) != r) {
      visited[mod1(v, n) - 1] = true;
      trace.push_back(v);
      v = w(v);
    }
    Int shift = (v - r) / n;
    if (shift == 0 && trace.size() == 1) continue;  // fixed residue class
    if (shift == 0) {
      cycles.push_back(detail::canonical_finite_cycle(std::move(trace), n));
    } else {
      // Try every residue representative as a start; prefer an all-in-window
      // listing, otherwise the smallest starting entry.
      std::optional<Cycle> best;
      bool best_in_window = false;
      for (Int e : trace) {
        Int s = mod1(e, n);
        std::vector<Int> listing{s};
        for (std::size_t j = 1; j < trace.size(); ++j)
          listing.push_back(w(listing.back()));
        bool in_window = std::all_of(listing.begin(), listing.end(),
                                     [n](Int x) { return 1 <= x && x <= n; });
        bool better = !best || (in_window && !best_in_window) ||
                      (in_window == best_in_window &&
                       listing.front() < best->entries.front());
        if (better) {
          best = Cycle{std::move(listing), shift};
          best_in_window = in_window;
        }
      }
      cycles.push_back(std::move(*best));
    }
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.shift != b.shift) return a.shift > b.shift;
    return a.entries.front() < b.entries.front();
  });
  return cycles;
}

// Rebuild a permutation from disjoint cycles.  Entries of each cycle must be
// pairwise distinct modulo the period, and distinct cycles must use disjoint
// residue classes.
inline PeriodicPermutation from_cycles(Int period,
                                       const CycleDecomposition& cycles) {
  PeriodicPermutation id(period);
  std::vector<Int> win = id.window();
  std::vector<bool> used(period, false);
  auto assign = [&](Int a, Int b) {  // w(a) = b
    Int r = mod1(a, period);
    if (used[r - 1])
      throw std::invalid_argument("cycles are not disjoint modulo the period");
    used[r - 1] = true;
    win[r - 1] = b - (a - r);
  };
  for (const Cycle& c : cycles) {
    if (c.entries.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t j = 0; j + 1 < c.entries.size(); ++j)
      assign(c.entries[j], c.entries[j + 1]);
    assign(c.entries.back(), c.entries.front() + period * c.shift);
  }
  return PeriodicPermutation(period, std::move(win));
}

// ---------------------------------------------------------------------------
// Text format: "(1,3)[1](4,2)[-1]"; finite cycles omit the shift suffix; the
// identity prints as "()".

inline std::string print_cycles(const CycleDecomposition& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t j = 0; j < c.entries.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c.entries[j]);
    }
    out += ')';
    if (c.shift != 0) out += '[' + std::to_string(c.shift) + ']';
  }
  return out;
}

inline std::string print_permutation(const PeriodicPermutation& w) {
  return print_cycles(cycle_decomposition(w));
}

// Parse the cycle text format.  Whitespace between tokens is ignored.  The
// result is normalized through from_cycles, so any rotation or translation of
// a cycle's entries is accepted.
inline PeriodicPermutation parse_permutation(const std::string& text, Int period) {
  CycleDecomposition cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> Int {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoll(text.substr(start, i - start));
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at position " + std::to_string(i));
    ++i;
    skip_ws();
    Cycle c;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()": identity marker, no entries
    } else {
      for (;;) {
        c.entries.push_back(parse_int());
        skip_ws();
        if (i >= text.size())
          throw ParseError("unterminated cycle");
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or ')' at position " + std::to_string(i));
      }
    }
    skip_ws();
    if (i < text.size() && text[i] == '[') {
      ++i;
      c.shift = parse_int();
      skip_ws();
      if (i >= text.size() || text[i] != ']')
        throw ParseError("expected ']' at position " + std::to_string(i));
      ++i;
    }
    if (!c.entries.empty()) cycles.push_back(std::move(c));
    skip_ws();
  }
  return from_cycles(period, cycles);
}

}  // namespace ctilde
