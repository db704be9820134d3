// Tests for reflection tuples: validation, braid moves on factorisations,
// orbit enumeration against exhaustive search, and conjugacy classification.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctilde/hurwitz.hpp"

using namespace ctilde;

namespace {

CtildeReflection refl(const Germ& germ, const std::string& text) {
  return germ.classify_reflection_element(germ.element(text));
}

ReflectionTuple coxeter_tuple(const Germ& germ) {
  std::vector<CtildeReflection> entries{
      refl(germ, "(4,5)"), refl(germ, "(2,3)"), refl(germ, "(1,2)(3,4)")};
  return ctilde::make_tuple(germ, entries, germ.coxeter());
}

std::set<std::string> keys(const std::vector<ReflectionTuple>& tuples) {
  std::set<std::string> out;
  for (const auto& t : tuples) out.insert(detail::tuple_key(t));
  return out;
}

}  // namespace

TEST_CASE("tuple validation", "[hurwitz][tuple]") {
  Germ germ = Germ::ctilde(2);
  ReflectionTuple t = coxeter_tuple(germ);
  REQUIRE(t.entries.size() == 3);
  // A tuple whose product is not the claimed target is rejected.
  std::vector<CtildeReflection> wrong{refl(germ, "(2,3)"),
                                      refl(germ, "(1,2)(3,4)")};
  REQUIRE_THROWS_AS(ctilde::make_tuple(germ, wrong, germ.coxeter()),
                    std::invalid_argument);
  // A non-reduced factorisation of the identity is rejected too.
  std::vector<CtildeReflection> square{refl(germ, "(2,3)"), refl(germ, "(2,3)")};
  REQUIRE_THROWS_AS(ctilde::make_tuple(germ, square, germ.identity()),
                    std::invalid_argument);
}

TEST_CASE("braid moves slide factors while conjugating", "[hurwitz][moves]") {
  Germ germ = Germ::ctilde(2);
  ReflectionTuple t = coxeter_tuple(germ);
  ReflectionTuple moved = hurwitz_move(germ, t, 1, +1);
  REQUIRE(print_permutation(moved.entries[0].elem.perm) == "(2,3)");
  REQUIRE(print_permutation(moved.entries[1].elem.perm) == "(4,5)");
  REQUIRE(print_permutation(moved.entries[2].elem.perm) == "(1,2)(3,4)");
  // Moves preserve the product and invert each other.
  std::mt19937 rng(2718);
  ReflectionTuple cur = t;
  for (int step = 0; step < 60; ++step) {
    Int i = std::uniform_int_distribution<Int>(1, 2)(rng);
    Int dir = std::uniform_int_distribution<Int>(0, 1)(rng) == 0 ? +1 : -1;
    ReflectionTuple next = hurwitz_move(germ, cur, i, dir);
    PeriodicPermutation prod(germ.period());
    for (const auto& r : next.entries) prod = compose(prod, r.elem.perm);
    REQUIRE(prod == germ.coxeter_perm());
    REQUIRE(detail::tuple_key(hurwitz_move(germ, next, i, -dir)) ==
            detail::tuple_key(cur));
    cur = next;
  }
}

TEST_CASE("rotation conjugates the leading factor to the tail",
          "[hurwitz][rotate]") {
  Germ germ = Germ::ctilde(2);
  ReflectionTuple t = coxeter_tuple(germ);
  ReflectionTuple r = rotate(germ, t);
  REQUIRE(r.entries.size() == 3);
  PeriodicPermutation prod(germ.period());
  for (const auto& e : r.entries) prod = compose(prod, e.elem.perm);
  REQUIRE(prod == germ.coxeter_perm());
  // Rotating as many times as there are entries conjugates everything once.
  ReflectionTuple full = t;
  for (int k = 0; k < 3; ++k) full = rotate(germ, full);
  for (int idx = 0; idx < 3; ++idx)
    REQUIRE(full.entries[idx].elem.perm ==
            germ.conjugate_by_coxeter_power(t.entries[idx].elem, -1).perm);
}

TEST_CASE("reduced factorisations of a short cycle", "[hurwitz][enumeration]") {
  Germ germ = Germ::ctilde(2);
  GermElement w = germ.element("(1,3,4,2)");
  bool truncated = true;
  auto decomps = reduced_decompositions(germ, w, 2, &truncated);
  REQUIRE_FALSE(truncated);
  // Four atoms, each with a forced cofactor.
  REQUIRE(decomps.size() == 4);
  for (const auto& d : decomps) {
    REQUIRE(d.entries.size() == 2);
    REQUIRE(compose(d.entries[0].elem.perm, d.entries[1].elem.perm) == w.perm);
  }
}

TEST_CASE("orbits of finite-support divisors exhaust the factorisations",
          "[hurwitz][orbit][oracle]") {
  Germ germ = Germ::ctilde(2);
  for (const GermElement& w : germ.bounded_divisors(germ.coxeter(), 1)) {
    if (w.perm.is_identity()) continue;
    bool finite_support = true;
    for (const Cycle& cyc : cycle_decomposition(w.perm))
      if (!cyc.finite()) finite_support = false;
    if (!finite_support) continue;
    bool truncated = true;
    auto decomps = reduced_decompositions(germ, w, 4, &truncated);
    REQUIRE_FALSE(truncated);
    REQUIRE_FALSE(decomps.empty());
    OrbitReport orbit = hurwitz_orbit(germ, decomps.front(), 4, 100000);
    REQUIRE_FALSE(orbit.capped);
    REQUIRE(keys(orbit.tuples) == keys(decomps));
  }
}

TEST_CASE("orbit of the Coxeter tuple reaches the bounded factorisations",
          "[hurwitz][orbit]") {
  Germ germ = Germ::ctilde(2);
  OrbitReport near = hurwitz_orbit(germ, coxeter_tuple(germ), 1, 100000);
  REQUIRE(near.tuples.size() == 24);
  REQUIRE(near.window_limited);  // moves drift out of the tight window
  OrbitReport wide = hurwitz_orbit(germ, coxeter_tuple(germ), 3, 100000);
  REQUIRE(wide.tuples.size() == 72);
  REQUIRE_FALSE(wide.capped);
  // Every factorisation of c found by blind search in the tight window is
  // reachable by moves from the standard tuple.
  bool truncated = false;
  auto window1 = reduced_decompositions(germ, germ.coxeter(), 1, &truncated);
  REQUIRE_FALSE(window1.empty());
  std::set<std::string> reached = keys(wide.tuples);
  for (const auto& k : keys(window1)) REQUIRE(reached.count(k) == 1);
}

TEST_CASE("orbit entries stay reduced", "[hurwitz][orbit]") {
  Germ germ = Germ::ctilde(2);
  OrbitReport orbit = hurwitz_orbit(germ, coxeter_tuple(germ), 2, 100000);
  for (const auto& t : orbit.tuples)
    for (const auto& e : t.entries)
      REQUIRE(germ.reflection_length_c(e.elem) == 1);
}

TEST_CASE("classification against powers of the Coxeter element",
          "[hurwitz][classify]") {
  Germ germ = Germ::ctilde(2);
  // Fixed instances first.
  ClassifiedReflection base = classify_reflection(germ, refl(germ, "(1,2)(3,4)"));
  REQUIRE(base.power == 0);
  REQUIRE(base.in_w_prime);
  REQUIRE(base.in_w_second);
  ClassifiedReflection far = classify_reflection(germ, *germ.try_reflection(1, 6));
  REQUIRE(far.power == 1);
  REQUIRE(print_permutation(far.target.elem.perm) == "(1,2)(3,4)");
  // Every bounded reflection lands on its target under c^m . c^-m.
  for (const CtildeReflection& r : germ.all_reflections(3)) {
    ClassifiedReflection cls = classify_reflection(germ, r);
    REQUIRE((cls.in_w_prime || cls.in_w_second));
    REQUIRE(germ.conjugate_by_coxeter_power(r.elem, cls.power).perm ==
            cls.target.elem.perm);
  }
}
