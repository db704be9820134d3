// Tests for the strip model: boundary order, crossing predicates, positive
// cycles and periodic non-crossing partitions with their meet and join.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "ctilde/germ.hpp"
#include "ctilde/partition.hpp"
#include "ctilde/strip.hpp"

using namespace ctilde;

TEST_CASE("odd/even strip classifies residues", "[strip]") {
  Strip s = Strip::odd_even(4);
  REQUIRE(s.period() == 4);
  REQUIRE(s.in_x(1));
  REQUIRE(s.in_x(3));
  REQUIRE_FALSE(s.in_x(2));
  REQUIRE_FALSE(s.in_x(4));
  REQUIRE(s.in_x(-3));  // residues, not representatives
  REQUIRE(s.is_odd_even());
  REQUIRE_FALSE(Strip::one_line(3).is_odd_even());
}

TEST_CASE("boundary order runs along X then back along Xi", "[strip]") {
  Strip s = Strip::odd_even(4);
  // X ascending: 1 < 3; then Xi descending: 4 < 2.
  REQUIRE(s.boundary_less(1, 3));
  REQUIRE(s.boundary_less(3, 4));
  REQUIRE(s.boundary_less(4, 2));
  REQUIRE_FALSE(s.boundary_less(2, 4));
  std::vector<Int> vals{1, 2, 3, 4};
  std::sort(vals.begin(), vals.end(),
            [&](Int a, Int b) { return s.boundary_less(a, b); });
  REQUIRE(vals == std::vector<Int>{1, 3, 4, 2});
}

TEST_CASE("strip Coxeter map", "[strip][coxeter]") {
  REQUIRE(Strip::odd_even(4).coxeter() == coxeter_element(2));
  REQUIRE(Strip::odd_even(6).coxeter() == coxeter_element(3));
  PeriodicPermutation d = Strip::one_line(3).coxeter();
  for (Int i = -3; i <= 6; ++i) REQUIRE(d(i) == i + 1);
}

TEST_CASE("finite crossing predicate", "[strip][crossing]") {
  Strip s = Strip::odd_even(4);
  // {1,3} and {2,4} are nested in the annulus (both top resp. bottom):
  // boundary order 1,3,4,2 gives blocks AABB.
  REQUIRE_FALSE(finite_sets_cross(s, {1, 3}, {2, 4}));
  // {1,4} and {2,3} interleave: 1 A, 3 B, 4 A, 2 B.
  REQUIRE(finite_sets_cross(s, {1, 4}, {2, 3}));
  // Sharing an element (up to translation) counts as crossing.
  REQUIRE(finite_sets_cross(s, {1, 2}, {5, 6}));
  // Disjoint neighbouring pairs do not cross.
  REQUIRE_FALSE(finite_sets_cross(s, {1, 2}, {3, 4}));
  // Two parallel chords joining the lines do not cross either.
  REQUIRE_FALSE(finite_sets_cross(s, {2, 3}, {4, 5}));
}

TEST_CASE("crossing agrees with germ membership of two-part partitions",
          "[strip][crossing][oracle]") {
  // Independent cross-check: a pair of transposition parts is a germ member
  // exactly when the two parts do not cross.
  Germ germ = Germ::ctilde(2);
  const Strip& s = germ.strip();
  int crossing = 0, members = 0;
  for (Int a = 1; a <= 4; ++a)
    for (Int b = a + 1; b <= a + 3; ++b)
      for (Int u = 1; u <= 4; ++u)
        for (Int v = u + 1; v <= u + 3; ++v) {
          std::vector<Int> p1{a, b}, p2{u, v};
          std::vector<Int> res{mod1(a, 4), mod1(b, 4), mod1(u, 4), mod1(v, 4)};
          std::sort(res.begin(), res.end());
          if (std::adjacent_find(res.begin(), res.end()) != res.end()) continue;
          PeriodicPermutation w =
              compose(periodic_transposition(4, a, b),
                      periodic_transposition(4, u, v));
          bool member = germ.try_element(w).has_value();
          bool cross = finite_sets_cross(s, p1, p2);
          REQUIRE(member == !cross);
          if (cross) ++crossing;
          if (member) ++members;
        }
  REQUIRE(crossing > 0);
  REQUIRE(members > 0);
}

TEST_CASE("finite against periodic crossing", "[strip][crossing]") {
  Strip s = Strip::odd_even(4);
  // A chord joining both boundary lines blocks every infinite path.
  REQUIRE(finite_crosses_periodic(s, {2, 3}, {1, 4}));
  // A chord with both feet on X avoids residue classes living on Xi only
  // when no X residue of the class falls strictly inside it.
  REQUIRE_FALSE(finite_crosses_periodic(s, {1, 3}, {2, 4}));
  // Meeting the class is a crossing.
  REQUIRE(finite_crosses_periodic(s, {5, 7}, {1, 2}));
}

TEST_CASE("positive cycles follow the boundary order", "[strip][cycles]") {
  Strip fig(9, {5, 6, 7, 8, 9});
  Germ germ(fig);
  // The five-point cycle of the first worked example is positive ...
  REQUIRE(germ.try_element(parse_permutation("(5,7,8,3,2)", 9)).has_value());
  // ... but revisiting its support in any other order is not.
  REQUIRE_FALSE(germ.try_element(parse_permutation("(5,8,7,3,2)", 9)).has_value());
  REQUIRE_FALSE(germ.try_element(parse_permutation("(5,7,8,2,3)", 9)).has_value());
  // Backwards orientation is rejected.
  REQUIRE_FALSE(germ.try_element(parse_permutation("(2,3,8,7,5)", 9)).has_value());
}

TEST_CASE("partition construction normalises parts", "[partition]") {
  PeriodicPartition p = make_partition(4, {{3, 1}}, {});
  REQUIRE(p.finite_parts.size() == 1);
  REQUIRE(p.finite_parts[0] == std::vector<Int>{1, 3});
  REQUIRE_FALSE(p.has_infinite());
  PeriodicPartition q = make_partition(4, {}, {6, 1});
  REQUIRE(q.infinite_residues == std::vector<Int>{1, 2});
}

TEST_CASE("partition print/parse round trip", "[partition][print]") {
  Germ germ = Germ::ctilde(2);
  for (const GermElement& x : germ.bounded_divisors(germ.coxeter(), 2)) {
    std::string text = print_partition(x.partition);
    PeriodicPartition back = parse_partition(text, 4);
    REQUIRE(print_partition(back) == text);
    REQUIRE(refines(back, x.partition));
    REQUIRE(refines(x.partition, back));
  }
  REQUIRE_THROWS_AS(parse_partition("{1,2", 4), ParseError);
  REQUIRE_THROWS_AS(parse_partition("{1 2}", 4), ParseError);
}

TEST_CASE("refinement is a partial order", "[partition][order]") {
  Germ germ = Germ::ctilde(2);
  auto divisors = germ.bounded_divisors(germ.coxeter(), 1);
  PeriodicPartition bottom = trivial_partition(4);
  PeriodicPartition top = full_partition(4);
  for (const GermElement& x : divisors) {
    REQUIRE(refines(x.partition, x.partition));
    REQUIRE(refines(bottom, x.partition));
    REQUIRE(refines(x.partition, top));
  }
  // Transitivity over the sample.
  for (const GermElement& x : divisors)
    for (const GermElement& y : divisors)
      for (const GermElement& z : divisors)
        if (refines(x.partition, y.partition) &&
            refines(y.partition, z.partition))
          REQUIRE(refines(x.partition, z.partition));
}

TEST_CASE("common refinement is the meet", "[partition][lattice]") {
  Germ germ = Germ::ctilde(2);
  auto divisors = germ.bounded_divisors(germ.coxeter(), 1);
  for (const GermElement& x : divisors)
    for (const GermElement& y : divisors) {
      PeriodicPartition m = common_refinement(x.partition, y.partition);
      REQUIRE(refines(m, x.partition));
      REQUIRE(refines(m, y.partition));
      for (const GermElement& z : divisors)
        if (refines(z.partition, x.partition) &&
            refines(z.partition, y.partition))
          REQUIRE(refines(z.partition, m));
    }
}

TEST_CASE("non-crossing join is the least upper bound", "[partition][lattice]") {
  Germ germ = Germ::ctilde(2);
  const Strip& s = germ.strip();
  auto divisors = germ.bounded_divisors(germ.coxeter(), 1);
  for (const GermElement& x : divisors)
    for (const GermElement& y : divisors) {
      PeriodicPartition j = noncrossing_join(s, x.partition, y.partition);
      REQUIRE(refines(x.partition, j));
      REQUIRE(refines(y.partition, j));
      for (const GermElement& z : divisors)
        if (refines(x.partition, z.partition) &&
            refines(y.partition, z.partition))
          REQUIRE(refines(j, z.partition));
      // Join of non-crossing partitions is again non-crossing.
      std::string why;
      REQUIRE(partition_noncrossing(s, j, &why));
    }
}

TEST_CASE("offset conflicts pool into the infinite part", "[partition][join]") {
  Germ germ = Germ::ctilde(2);
  const Strip& s = germ.strip();
  // {1,4} joined with {1,8} (same residues, different offsets) cannot stay
  // finite: the join must absorb both classes into an infinite part.
  PeriodicPartition a = make_partition(4, {{1, 4}}, {});
  PeriodicPartition b = make_partition(4, {{1, 8}}, {});
  PeriodicPartition j = noncrossing_join(s, a, b);
  REQUIRE(j.has_infinite());
  REQUIRE(j.infinite_residues == std::vector<Int>{1, 4});
  REQUIRE(refines(a, j));
  REQUIRE(refines(b, j));
}

TEST_CASE("partition of a permutation collects orbits", "[partition]") {
  PeriodicPartition p = partition_of(parse_permutation("(1,3,4,2)", 4));
  REQUIRE(p.finite_parts == std::vector<std::vector<Int>>{{1, 2, 3, 4}});
  PeriodicPartition q = partition_of(coxeter_element(2));
  REQUIRE(q.finite_parts.empty());
  REQUIRE(q.infinite_residues == std::vector<Int>{1, 2, 3, 4});
  PeriodicPartition r = partition_of(parse_permutation("(1)[1](4)[-1]", 4));
  REQUIRE(r.infinite_residues == std::vector<Int>{1, 4});
}

TEST_CASE("element_of inverts partition_of on the germ", "[partition][germ]") {
  for (Int n : {2, 3}) {
    Germ germ = Germ::ctilde(n);
    for (const GermElement& x : germ.bounded_divisors(germ.coxeter(), 2)) {
      PeriodicPermutation back = element_of(germ.strip(), x.partition);
      REQUIRE(back == x.perm);
      PeriodicPartition p = partition_of(back);
      REQUIRE(refines(p, x.partition));
      REQUIRE(refines(x.partition, p));
    }
  }
}
