#pragma once

// Fixed subgerms under conjugation by powers of c.
//
// Conjugation by c^h is a germ automorphism of P^sigma; its fixed elements
// form a subgerm closed under products, quotients, lcm and gcd (quotients of
// fixed elements are automatically fixed, so divisibility in the subgerm is
// ambient divisibility restricted).  The fixed subgerm of c^h equals that of
// c^gcd(h,n), and is isomorphic to the dual germ of finite type C_gcd(h,n).
//
// For h = n the isomorphism is explicit: a fixed element preserves the odd
// line X and factors as x . sigma(x) with x a permutation of X; reindexing X
// by 2k+1 -> k turns x into an n-periodic one-line non-crossing permutation,
// i.e. an element of the type C_n dual germ (divisors of the shift
// d: i -> i+1).  For proper divisors h | n the identification is verified
// structurally: element counts, atom counts and the divisibility posets are
// compared against the independently enumerated type C germ.

#include <functional>
#include <map>
#include <numeric>

#include "ctilde/germ.hpp"

namespace ctilde {

// c^h x c^{-h} = x.
inline bool is_fixed_by(const Germ& germ, const GermElement& x, Int h) {
  return germ.conjugate_by_coxeter_power(x, h).perm == x.perm;
}

// Window-K enumeration of the fixed subgerm of c^h.
inline std::vector<GermElement> fixed_subgerm(const Germ& germ, Int h,
                                              Int window) {
  std::vector<GermElement> out;
  for (auto& e : germ.bounded_divisors(germ.coxeter(), window))
    if (is_fixed_by(germ, e, h)) out.push_back(std::move(e));
  return out;
}

// The explicit isomorphism for h = n: restrict to the odd line and reindex
// by 2k+1 -> k.  The image is an element of the type C_n dual germ.
inline GermElement iso_to_typeC(const Germ& germ, const Germ& typec,
                                const GermElement& x) {
  Int n = germ.rank();
  if (typec.period() != n || typec.strip().two_line())
    throw std::invalid_argument("target germ must be one-line of period n");
  if (!is_fixed_by(germ, x, n))
    throw std::invalid_argument("element is not fixed by c^n");
  std::vector<Int> win(n);
  for (Int j = 1; j <= n; ++j) {
    Int img = x.perm(2 * j + 1);
    if (img % 2 == 0)
      throw std::invalid_argument("element does not preserve the odd line");
    win[j - 1] = (img - 1) / 2;
  }
  return typec.element(PeriodicPermutation(n, std::move(win)));
}

// Inverse of iso_to_typeC: u acts on the odd line via 2k+1 <- k and on the
// even line as sigma(x); the result is x . sigma(x), fixed by c^n.
inline GermElement iso_from_typeC(const Germ& germ, const GermElement& u) {
  Int n = germ.rank();
  if (u.perm.period() != n)
    throw std::invalid_argument("period mismatch");
  std::vector<Int> win(2 * n);
  for (Int i = 1; i <= 2 * n; ++i) {
    if (i % 2 != 0)
      win[i - 1] = 2 * u.perm((i - 1) / 2) + 1;
    else
      win[i - 1] = -2 * u.perm(-i / 2);
  }
  return germ.element(PeriodicPermutation(2 * n, std::move(win)));
}

// Complete enumeration of the type C_k dual germ: every element moves each
// point by less than the period in absolute value, so a box search with
// membership filtering is exhaustive.
inline std::vector<GermElement> type_c_germ_elements(const Germ& typec) {
  if (typec.strip().two_line())
    throw std::invalid_argument("expected a one-line germ");
  Int k = typec.period();
  std::vector<GermElement> out;
  std::vector<Int> win(k);
  std::function<void(Int)> rec = [&](Int i) {
    if (i > k) {
      try {
        PeriodicPermutation w(k, win);
        auto e = typec.try_element(w);
        if (e && refines(e->partition, typec.coxeter().partition))
          out.push_back(std::move(*e));
      } catch (const std::invalid_argument&) {
      }
      return;
    }
    for (Int img = i - k; img <= i + k; ++img) {
      win[i - 1] = img;
      rec(i + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Structural comparison of two finite graded divisibility posets.

namespace detail {

// Divisibility matrix of an enumerated germ subset.
inline std::vector<std::vector<bool>> divisibility_matrix(
    const Germ& germ, const std::vector<GermElement>& elems) {
  std::size_t m = elems.size();
  std::vector<std::vector<bool>> d(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      d[i][j] = germ.divides(elems[i], elems[j]);
  return d;
}

// Backtracking poset isomorphism with iterated degree refinement.
inline bool posets_isomorphic(const std::vector<std::vector<bool>>& a,
                              const std::vector<std::vector<bool>>& b) {
  std::size_t m = a.size();
  if (b.size() != m) return false;
  // Refinement: signature = multiset of neighbor signatures, both ways.
  // Classes must be numbered by one dictionary shared between the two
  // posets, otherwise equal signatures get unrelated ids.
  std::vector<std::size_t> siga(m, 0), sigb(m, 0);
  auto keys_of = [m](const std::vector<std::vector<bool>>& rel,
                     const std::vector<std::size_t>& sig) {
    std::vector<std::vector<std::size_t>> keys(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> down, up;
      for (std::size_t j = 0; j < m; ++j) {
        if (rel[j][i]) down.push_back(sig[j]);
        if (rel[i][j]) up.push_back(sig[j]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      keys[i] = {sig[i]};
      keys[i].push_back(down.size());
      keys[i].insert(keys[i].end(), down.begin(), down.end());
      keys[i].push_back(up.size());
      keys[i].insert(keys[i].end(), up.begin(), up.end());
    }
    return keys;
  };
  for (int round = 0; round < 4; ++round) {
    auto ka = keys_of(a, siga);
    auto kb = keys_of(b, sigb);
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& key : ka) ids.try_emplace(key, 0);
    for (const auto& key : kb) ids.try_emplace(key, 0);
    std::size_t next = 0;
    for (auto& entry : ids) entry.second = next++;
    for (std::size_t i = 0; i < m; ++i) siga[i] = ids.at(ka[i]);
    for (std::size_t i = 0; i < m; ++i) sigb[i] = ids.at(kb[i]);
  }
  std::map<std::size_t, Int> counta, countb;
  for (std::size_t s : siga) ++counta[s];
  for (std::size_t s : sigb) ++countb[s];
  if (counta != countb) return false;
  // Backtracking assignment, most constrained first.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return counta[siga[i]] < counta[siga[j]];
  });
  std::vector<Int> match(m, -1), used(m, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t step) -> bool {
    if (step == m) return true;
    std::size_t i = order[step];
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || sigb[j] != siga[i]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < step && ok; ++prev) {
        std::size_t pi = order[prev];
        std::size_t pj = static_cast<std::size_t>(match[pi]);
        ok = (a[i][pi] == b[j][pj]) && (a[pi][i] == b[pj][j]);
      }
      if (!ok) continue;
      match[i] = static_cast<Int>(j);
      used[j] = 1;
      if (assign(step + 1)) return true;
      match[i] = -1;
      used[j] = 0;
    }
    return false;
  };
  return assign(0);
}

inline Int count_atoms(const std::vector<std::vector<bool>>& d) {
  Int atoms = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int divisors = 0;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j][i]) ++divisors;
    if (divisors == 2) ++atoms;  // identity and the element itself
  }
  return atoms;
}

}  // namespace detail

struct CentralizerReport {
  Int n = 0, h = 0, g = 0;  // g = gcd(h, n)
  Int window = 0;
  Int fixed_count = 0;
  Int typec_count = 0;
  Int fixed_atom_count = 0;
  Int typec_atom_count = 0;
  bool gcd_sets_equal = false;   // fixed_subgerm(h) == fixed_subgerm(g)
  bool counts_match = false;
  bool lattice_isomorphic = false;

  bool verified() const {
    return gcd_sets_equal && counts_match && lattice_isomorphic;
  }
};

// Compare the fixed subgerm of c^h against the independently enumerated
// type C_gcd(h,n) dual germ.
inline CentralizerReport verify_centralizer_type(const Germ& germ, Int h,
                                                 Int window) {
  CentralizerReport rep;
  rep.n = germ.rank();
  rep.h = h;
  rep.g = std::gcd(h, rep.n);
  rep.window = window;
  std::vector<GermElement> fixed = fixed_subgerm(germ, h, window);
  std::vector<GermElement> fixed_g = fixed_subgerm(germ, rep.g, window);
  rep.gcd_sets_equal = fixed == fixed_g;
  Germ typec = Germ::type_c(rep.g);
  std::vector<GermElement> cgerm = type_c_germ_elements(typec);
  rep.fixed_count = static_cast<Int>(fixed.size());
  rep.typec_count = static_cast<Int>(cgerm.size());
  rep.counts_match = rep.fixed_count == rep.typec_count;
  auto dfixed = detail::divisibility_matrix(germ, fixed);
  auto dc = detail::divisibility_matrix(typec, cgerm);
  rep.fixed_atom_count = detail::count_atoms(dfixed);
  rep.typec_atom_count = detail::count_atoms(dc);
  rep.lattice_isomorphic = detail::posets_isomorphic(dfixed, dc);
  return rep;
}

}  // namespace ctilde
