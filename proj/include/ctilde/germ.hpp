#pragma once

// The dual braid germ of non-crossing periodic permutations.
//
// Fix a strip.  P is the set of periodic permutations all of whose cycles
// are positive self-non-crossing, pairwise non-crossing, with total shift
// zero on a two-line strip.  P consists exactly of the divisors of the dual
// Coxeter element c of the strip, and w -> p_w (orbit partition) is an
// isomorphism from P ordered by division onto non-crossing partitions
// ordered by refinement.
//
// The germ product x * y is the composition when it lies in P and the
// reflection lengths add; the partial product makes P a Garside germ with
// Garside element c.
//
// For the odd/even strip of period 2n the involution sigma(w) = s w s with
// s: i -> 1 - i preserves P; the fixed subgerm P^sigma is the dual germ of
// the affine type C~ group.  Its atoms are the C~ reflections: "long"
// reflections (a, 2kn+1-a) fixed by sigma, and "paired" products
// (a, b)(1-a, 1-b) of a transposition with its sigma image.  The C~
// reflection length f of a sigma-stable element is computed cycle-pairwise:
// a sigma-stable finite cycle of length 2k contributes k, a pair {cycle,
// sigma image} of length-k cycles contributes k-1, and the pseudo-cycle
// (pair of infinite cycles) with support of size 2k modulo the period
// contributes k+1.

#include <cassert>
#include <deque>
#include <functional>
#include <map>

#include "ctilde/partition.hpp"

namespace ctilde {

struct GermElement {
  PeriodicPermutation perm;
  PeriodicPartition partition;
  Int length_a = 0;        // reflection length in the ambient affine type A
  bool sigma_stable = false;

  friend bool operator==(const GermElement& a, const GermElement& b) {
    return a.perm == b.perm;
  }
  friend bool operator<(const GermElement& a, const GermElement& b) {
    return a.perm < b.perm;
  }
};

struct CtildeReflection {
  GermElement elem;
  bool is_long = false;
  // Canonical transposition {a, b}: a = minimal entry over all translates of
  // both orbits, taken in [1, N].  For a long reflection a + b = 2kn + 1.
  Int a = 0, b = 0;
  Int k = 0;  // long reflections only: (a + b - 1) / (2n)

  friend bool operator==(const CtildeReflection& x, const CtildeReflection& y) {
    return x.elem == y.elem;
  }
  friend bool operator<(const CtildeReflection& x, const CtildeReflection& y) {
    return x.elem < y.elem;
  }
};

class Germ {
 public:
  explicit Germ(Strip strip)
      : strip_(std::move(strip)),
        cox_(strip_.coxeter()),
        cox_elem_(make_element(cox_)),
        id_elem_(make_element(PeriodicPermutation(strip_.period()))) {}

  // The type C~ germ of rank n: odd/even strip of period 2n.
  static Germ ctilde(Int n) { return Germ(Strip::odd_even(2 * n)); }
  // The finite type C germ of rank k: one-line strip of period k, whose
  // Coxeter element is the shift d: i -> i + 1.
  static Germ type_c(Int k) { return Germ(Strip::one_line(k)); }

  const Strip& strip() const { return strip_; }
  Int period() const { return strip_.period(); }
  // Rank of the C~ germ (period = 2n).
  Int rank() const { return strip_.period() / 2; }
  const PeriodicPermutation& coxeter_perm() const { return cox_; }
  const GermElement& coxeter() const { return cox_elem_; }
  const GermElement& identity() const { return id_elem_; }

  // -------------------------------------------------------------------------
  // Membership

  // Checks that w lies in P; on success returns the element with its orbit
  // partition and type A reflection length.  On failure, if why is given, it
  // receives the violated clause and the offending cycle or pair.
  std::optional<GermElement> try_element(const PeriodicPermutation& w,
                                         std::string* why = nullptr) const {
    auto fail = [&](const std::string& msg) -> std::optional<GermElement> {
      if (why) *why = msg;
      return std::nullopt;
    };
    if (w.period() != period()) return fail("period mismatch");
    if (strip_.two_line() && total_shift(w) != 0)
      return fail("total shift is nonzero");
    CycleDecomposition cycles = cycle_decomposition(w);
    std::string cycle_why;
    for (const Cycle& c : cycles)
      if (!is_positive_cycle(strip_, c, w, &cycle_why)) return fail(cycle_why);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (cycles_cross(cycles[i], cycles[j]))
          return fail("cycles " + print_cycles({cycles[i]}) + " and " +
                      print_cycles({cycles[j]}) + " cross");
      }
    }
    Int length = 0;
    for (const Cycle& c : cycles)
      length += static_cast<Int>(c.entries.size()) + std::abs(c.shift) - 1;
    bool stable = strip_.two_line() && sigma(w) == w;
    return GermElement{w, partition_of(w), length, stable};
  }

  GermElement element(const PeriodicPermutation& w) const {
    std::string why;
    auto e = try_element(w, &why);
    if (!e) throw std::invalid_argument("not in the germ: " + why);
    return *e;
  }

  GermElement element(const std::string& cycles_text) const {
    return element(parse_permutation(cycles_text, period()));
  }

  // The unique element of P whose orbit partition is p.
  GermElement element_of_partition(const PeriodicPartition& p) const {
    return element(element_of(strip_, p));
  }

  // -------------------------------------------------------------------------
  // Germ structure

  // x * y if defined: composition in P with lengths adding.
  std::optional<GermElement> product(const GermElement& x,
                                     const GermElement& y) const {
    auto z = try_element(compose(x.perm, y.perm));
    if (!z || z->length_a != x.length_a + y.length_a) return std::nullopt;
    return z;
  }

  // Left division x | y, via the partition order.
  bool divides(const GermElement& x, const GermElement& y) const {
    return refines(x.partition, y.partition);
  }

  // The left quotient x^{-1} y for x | y.
  GermElement left_quotient(const GermElement& x, const GermElement& y) const {
    GermElement q = element(compose(inverse(x.perm), y.perm));
    if (q.length_a + x.length_a != y.length_a)
      throw std::invalid_argument("left quotient does not split the length");
    return q;
  }

  // The right quotient y x^{-1} for x | y (divisors of an element of P are
  // two-sided).
  GermElement right_quotient(const GermElement& x, const GermElement& y) const {
    GermElement q = element(compose(y.perm, inverse(x.perm)));
    if (q.length_a + x.length_a != y.length_a)
      throw std::invalid_argument("right quotient does not split the length");
    return q;
  }

  // The complement x^{-1} c, so that x * complement(x) = c.
  GermElement complement(const GermElement& x) const {
    return left_quotient(x, cox_elem_);
  }
  // The left complement c x^{-1}, so that left_complement(x) * x = c.
  GermElement left_complement(const GermElement& x) const {
    return right_quotient(x, cox_elem_);
  }

  // Lattice operations.  On a two-line strip these are the operations of the
  // sigma-fixed subgerm and require sigma-stable arguments.
  GermElement lcm(const GermElement& x, const GermElement& y) const {
    require_sigma_stable(x, "lcm");
    require_sigma_stable(y, "lcm");
    return element_of_partition(
        noncrossing_join(strip_, x.partition, y.partition));
  }

  GermElement gcd(const GermElement& x, const GermElement& y) const {
    require_sigma_stable(x, "gcd");
    require_sigma_stable(y, "gcd");
    return element_of_partition(
        common_refinement(x.partition, y.partition));
  }

  // tau(x) = c^{-1} x c, the Garside automorphism of the germ.
  GermElement garside_automorphism(const GermElement& x) const {
    return element(conjugate(x.perm, inverse(cox_)));
  }
  GermElement garside_automorphism_inverse(const GermElement& x) const {
    return element(conjugate(x.perm, cox_));
  }

  PeriodicPermutation coxeter_power(Int m) const {
    PeriodicPermutation p(period());
    PeriodicPermutation step = m >= 0 ? cox_ : inverse(cox_);
    for (Int i = 0; i < std::abs(m); ++i) p = compose(p, step);
    return p;
  }

  // c^m x c^{-m}.
  GermElement conjugate_by_coxeter_power(const GermElement& x, Int m) const {
    return element(conjugate(x.perm, coxeter_power(m)));
  }

  // -------------------------------------------------------------------------
  // C~ reflections (odd/even strip only)

  // The sigma-stable reflection of P^sigma determined by the transposition
  // (a, b): the transposition itself when a + b = 1 mod 2n (long), otherwise
  // the product (a, b)(1-a, 1-b) (paired).
  CtildeReflection reflection(Int a, Int b) const {
    auto r = try_reflection(a, b);
    if (!r)
      throw std::invalid_argument("the reflection determined by (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ") does not divide c");
    return *r;
  }

  // As reflection(a, b), but empty when the resulting permutation is not in
  // the germ (wide transpositions cross their own translates).
  std::optional<CtildeReflection> try_reflection(Int a, Int b) const {
    require_odd_even("try_reflection");
    Int n2 = period();
    if (mod1(a, n2) == mod1(b, n2))
      throw std::invalid_argument("reflection entries collide modulo the period");
    PeriodicPermutation t = periodic_transposition(n2, a, b);
    PeriodicPermutation p =
        mod1(a + b, n2) == mod1(1, n2) ? t : compose(t, sigma(t));
    auto e = try_element(p);
    if (!e) return std::nullopt;
    return classify_reflection_element(*e);
  }

  // Recognize an element with f = 1 as a C~ reflection and compute its
  // canonical parameters.
  CtildeReflection classify_reflection_element(const GermElement& e) const {
    require_odd_even("classify_reflection_element");
    if (!e.sigma_stable)
      throw std::invalid_argument("reflection must be sigma-stable");
    CycleDecomposition cycles = cycle_decomposition(e.perm);
    for (const Cycle& c : cycles)
      if (c.entries.size() != 2 || !c.finite())
        throw std::invalid_argument("not a reflection");
    CtildeReflection r{e, false, 0, 0, 0};
    if (cycles.size() == 1) {
      r.is_long = true;
      r.a = cycles[0].entries[0];
      r.b = cycles[0].entries[1];
      if (r.a > r.b) std::swap(r.a, r.b);
      Int sum = r.a + r.b;
      if (mod1(sum, period()) != mod1(1, period()))
        throw std::invalid_argument("not a reflection");
      r.k = (sum - 1) / period();
    } else if (cycles.size() == 2) {
      r.is_long = false;
      // Pick the orbit with the globally minimal canonical entry.
      const Cycle& first =
          std::min(cycles[0], cycles[1], [](const Cycle& x, const Cycle& y) {
            return x.entries.front() < y.entries.front();
          });
      r.a = first.entries[0];
      r.b = first.entries[1];
      if (r.a > r.b) std::swap(r.a, r.b);
      r.k = 0;
    } else {
      throw std::invalid_argument("not a reflection");
    }
    if (reflection_length_c(e) != 1)
      throw std::invalid_argument("not a reflection");
    return r;
  }

  // f(x): the reflection length of a sigma-stable element in the affine
  // type C~ group.
  Int reflection_length_c(const GermElement& x) const {
    require_odd_even("reflection_length_c");
    require_sigma_stable(x, "reflection_length_c");
    CycleDecomposition cycles = cycle_decomposition(x.perm);
    Int f = 0;
    // Pseudo-cycle: the two infinite cycles together.
    Int infinite_support = 0;
    bool has_infinite = false;
    std::vector<const Cycle*> finite;
    for (const Cycle& c : cycles) {
      if (c.finite()) {
        finite.push_back(&c);
      } else {
        has_infinite = true;
        infinite_support += static_cast<Int>(c.entries.size());
      }
    }
    if (has_infinite) {
      assert(infinite_support % 2 == 0);
      f += infinite_support / 2 + 1;
    }
    // Match finite cycles with their sigma images.
    std::map<std::vector<Int>, std::size_t> by_canonical_part;
    for (std::size_t i = 0; i < finite.size(); ++i)
      by_canonical_part[detail::canonical_part(finite[i]->entries, period())] = i;
    std::vector<bool> done(finite.size(), false);
    for (std::size_t i = 0; i < finite.size(); ++i) {
      if (done[i]) continue;
      done[i] = true;
      std::vector<Int> img;
      for (Int v : finite[i]->entries) img.push_back(1 - v);
      auto it = by_canonical_part.find(detail::canonical_part(img, period()));
      assert(it != by_canonical_part.end());
      Int len = static_cast<Int>(finite[i]->entries.size());
      if (it->second == i) {
        assert(len % 2 == 0);
        f += len / 2;  // sigma-stable cycle of length 2k
      } else {
        done[it->second] = true;
        f += len - 1;  // pair of sigma-exchanged cycles of length k each
      }
    }
    return f;
  }

  // rho^{-1} x for a reflection rho dividing x; f decreases by one.
  GermElement quotient_by_reflection(const CtildeReflection& rho,
                                     const GermElement& x) const {
    if (!divides(rho.elem, x))
      throw std::invalid_argument("reflection does not divide the element");
    return left_quotient(rho.elem, x);
  }

  // All C~ reflections dividing x whose canonical transposition {a, b}
  // (minimal entry in [1, N]) satisfies b <= N * (window + 1).  When parts of
  // x admit reflections beyond that window (always the case for an infinite
  // part), *truncated is set.
  std::vector<CtildeReflection> atoms_dividing(const GermElement& x, Int window,
                                               bool* truncated = nullptr) const {
    require_odd_even("atoms_dividing");
    require_sigma_stable(x, "atoms_dividing");
    if (truncated) *truncated = false;
    Int n2 = period();
    Int bound = n2 * (window + 1);
    std::set<PeriodicPermutation> seen;
    std::vector<CtildeReflection> out;
    auto add_pair = [&](Int u, Int v) {
      if (mod1(u, n2) == mod1(v, n2)) return;
      if (v < u) std::swap(u, v);
      if (v > bound) {
        if (truncated) *truncated = true;
        return;
      }
      auto r = try_reflection(u, v);
      if (!r || !divides(r->elem, x)) return;  // partner must also fit a part
      if (seen.insert(r->elem.perm).second) out.push_back(std::move(*r));
    };
    for (const auto& part : x.partition.finite_parts)
      for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
          add_pair(part[i], part[j]);
    if (x.partition.has_infinite()) {
      if (truncated) *truncated = true;
      const auto& res = x.partition.infinite_residues;
      for (Int u : res)
        for (Int r : res)
          for (Int j = 0; j <= window; ++j)
            if (r + j * n2 > u) add_pair(u, r + j * n2);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // -------------------------------------------------------------------------
  // Bounded enumeration

  // All sigma-stable divisors of x reachable by multiplying window-bounded
  // atoms (complete whenever x has finite support and the window covers its
  // parts).
  std::vector<GermElement> bounded_divisors(const GermElement& x,
                                            Int window) const {
    require_sigma_stable(x, "bounded_divisors");
    std::set<PeriodicPermutation> seen{id_elem_.perm};
    std::deque<GermElement> queue{id_elem_};
    std::vector<GermElement> out{id_elem_};
    while (!queue.empty()) {
      GermElement u = std::move(queue.front());
      queue.pop_front();
      GermElement rest = left_quotient(u, x);
      for (const CtildeReflection& rho : atoms_dividing(rest, window)) {
        auto v = product(u, rho.elem);
        if (!v) continue;
        if (!seen.insert(v->perm).second) continue;
        out.push_back(*v);
        queue.push_back(std::move(*v));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // -------------------------------------------------------------------------
  // Independent C~-side divisibility: u | v iff some reduced C~ reflection
  // decomposition of v starts with one of u.  First letters are taken from
  // the window enumeration of all C~ reflections; division by a reflection
  // is decided by the length formula alone (f drops by one and the quotient
  // stays in the germ).

  bool divides_by_decomposition_search(const GermElement& u, const GermElement& v,
                                       Int window) const {
    require_sigma_stable(u, "divides_by_decomposition_search");
    require_sigma_stable(v, "divides_by_decomposition_search");
    std::map<std::pair<PeriodicPermutation, PeriodicPermutation>, bool> memo;
    std::vector<CtildeReflection> all = all_reflections(window);
    std::function<bool(const GermElement&, const GermElement&)> rec =
        [&](const GermElement& a, const GermElement& b) -> bool {
      if (a.perm.is_identity()) return true;
      auto key = std::make_pair(a.perm, b.perm);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      bool ok = false;
      Int fa = reflection_length_c(a), fb = reflection_length_c(b);
      for (const CtildeReflection& rho : all) {
        auto qa = try_element(compose(inverse(rho.elem.perm), a.perm));
        if (!qa || !qa->sigma_stable || reflection_length_c(*qa) != fa - 1)
          continue;
        auto qb = try_element(compose(inverse(rho.elem.perm), b.perm));
        if (!qb || !qb->sigma_stable || reflection_length_c(*qb) != fb - 1)
          continue;
        if (rec(*qa, *qb)) {
          ok = true;
          break;
        }
      }
      memo[key] = ok;
      return ok;
    };
    return rec(u, v);
  }

  // Every C~ reflection with canonical transposition inside the window.
  std::vector<CtildeReflection> all_reflections(Int window) const {
    require_odd_even("all_reflections");
    Int n2 = period();
    std::set<PeriodicPermutation> seen;
    std::vector<CtildeReflection> out;
    for (Int u = 1; u <= n2; ++u) {
      for (Int v = u + 1; v <= n2 * (window + 1); ++v) {
        if (mod1(u, n2) == mod1(v, n2)) continue;
        auto r = try_reflection(u, v);
        if (r && seen.insert(r->elem.perm).second)
          out.push_back(std::move(*r));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  GermElement make_element(const PeriodicPermutation& w) const {
    std::string why;
    auto e = try_element(w, &why);
    if (!e) throw std::logic_error("germ bootstrap failed: " + why);
    return *e;
  }

  void require_sigma_stable(const GermElement& x, const char* op) const {
    if (strip_.two_line() && !x.sigma_stable)
      throw std::invalid_argument(std::string(op) +
                                  " requires a sigma-stable element");
  }
  void require_odd_even(const char* op) const {
    if (!strip_.is_odd_even())
      throw std::invalid_argument(std::string(op) +
                                  " requires the odd/even strip");
  }

  bool cycles_cross(const Cycle& a, const Cycle& b) const {
    auto residues = [&](const Cycle& c) {
      std::vector<Int> r;
      for (Int e : c.entries) r.push_back(mod1(e, period()));
      return r;
    };
    if (a.finite() && b.finite())
      return finite_sets_cross(strip_, a.entries, b.entries);
    if (a.finite()) return finite_crosses_periodic(strip_, a.entries, residues(b));
    if (b.finite()) return finite_crosses_periodic(strip_, b.entries, residues(a));
    return periodic_sets_cross(strip_, residues(a), residues(b));
  }

  Strip strip_;
  PeriodicPermutation cox_;
  GermElement cox_elem_;
  GermElement id_elem_;
};

// Reflection length of w in the ambient affine type A group of the strip:
// sum over cycles of (number of entries + |shift| - 1).  Defined here for
// elements of P only (the germ membership conditions are verified).
inline Int reflection_length_A(const Strip& strip, const PeriodicPermutation& w) {
  Germ germ(strip);
  return germ.element(w).length_a;
}

}  // namespace ctilde
