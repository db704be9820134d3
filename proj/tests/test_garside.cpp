// Tests for the Garside-group layer: greedy normal forms, the word problem
// for positive words, braid relations of the presentation, and parsing.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctilde/garside.hpp"

using namespace ctilde;

namespace {

// Order of the product of two group elements of a permutation group; caps at
// `limit` to keep failures finite.
Int product_order(const PeriodicPermutation& a, const PeriodicPermutation& b,
                  Int limit = 12) {
  PeriodicPermutation p = compose(a, b);
  PeriodicPermutation acc = p;
  for (Int k = 1; k <= limit; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, p);
  }
  return -1;
}

// Expected Coxeter-diagram bond between generators i < j: 4 at both ends,
// 3 between inner neighbours, 2 otherwise.
Int expected_bond(Int i, Int j, Int n) {
  if (j != i + 1) return 2;
  if (i == 0 || j == n) return 4;
  return 3;
}

Word alternating(Int i, Int j, Int m) {
  Word w;
  for (Int k = 0; k < m; ++k) w.push_back(Letter{k % 2 == 0 ? i : j, false});
  return w;
}

std::string word_text(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 's' << w[i].index;
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace

TEST_CASE("pinned normal forms", "[group][normalform]") {
  GarsideGroup group(2);
  REQUIRE(group.print(group.normalize("s0 s2 s1")) == "D^1 |");
  REQUIRE(group.print(group.normalize("")) == "D^0 |");
  REQUIRE(group.print(group.normalize("s0 s1 s2 s0")) ==
          "D^0 | (3,5,6,4) . (2,3)(4,5)");
}

TEST_CASE("generator permutations", "[group][generators]") {
  GarsideGroup group(2);
  const Germ& germ = group.germ();
  REQUIRE(group.classical_generator(0).perm == germ.element("(4,5)").perm);
  REQUIRE(group.classical_generator(1).perm == germ.element("(1,2)(3,4)").perm);
  REQUIRE(group.classical_generator(2).perm == germ.element("(2,3)").perm);
  // The right-to-left product of all generators, evens then odds, is the
  // Coxeter element.
  for (Int n = 2; n <= 4; ++n) {
    GarsideGroup g(n);
    std::vector<Int> order;
    for (Int i = 0; i <= n; i += 2) order.push_back(i);
    for (Int i = 1; i <= n; i += 2) order.push_back(i);
    PeriodicPermutation acc(2 * n);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      acc = compose(g.classical_generator(*it).perm, acc);
    REQUIRE(acc == g.germ().coxeter_perm());
  }
}

TEST_CASE("diagram bonds match product orders", "[group][relations][oracle]") {
  for (Int n = 2; n <= 4; ++n) {
    GarsideGroup group(n);
    for (Int i = 0; i <= n; ++i)
      for (Int j = i + 1; j <= n; ++j)
        REQUIRE(product_order(group.classical_generator(i).perm,
                              group.classical_generator(j).perm) ==
                expected_bond(i, j, n));
  }
}

TEST_CASE("braid relations hold as normal-form equalities",
          "[group][relations]") {
  for (Int n = 2; n <= 4; ++n) {
    GarsideGroup group(n);
    for (Int i = 0; i <= n; ++i)
      for (Int j = i + 1; j <= n; ++j) {
        Int m = expected_bond(i, j, n);
        GroupElement lhs = group.from_word(alternating(i, j, m));
        GroupElement rhs = group.from_word(alternating(j, i, m));
        REQUIRE(group.equals(lhs, rhs));
      }
  }
}

TEST_CASE("word problem under random relation rewriting",
          "[group][wordproblem]") {
  std::mt19937 rng(424242);
  for (Int n : {2, 3}) {
    GarsideGroup group(n);
    // Both sides of every defining relation, as letter strings.
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> rules;
    for (Int i = 0; i <= n; ++i)
      for (Int j = 0; j <= n; ++j) {
        if (i == j) continue;
        Int m = expected_bond(std::min(i, j), std::max(i, j), n);
        std::vector<Int> l, r;
        for (Int k = 0; k < m; ++k) {
          l.push_back(k % 2 == 0 ? i : j);
          r.push_back(k % 2 == 0 ? j : i);
        }
        rules.emplace_back(l, r);
      }
    std::uniform_int_distribution<Int> len(1, 12), gen(0, n);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> word(len(rng));
      for (Int& g : word) g = gen(rng);
      Word w;
      for (Int g : word) w.push_back(Letter{g, false});
      GroupElement reference = group.from_word(w);
      for (int step = 0; step < 10; ++step) {
        // Collect all positions where some relation side matches.
        std::vector<std::pair<std::size_t, std::size_t>> hits;
        for (std::size_t pos = 0; pos < word.size(); ++pos)
          for (std::size_t ridx = 0; ridx < rules.size(); ++ridx) {
            const auto& side = rules[ridx].first;
            if (pos + side.size() > word.size()) continue;
            if (std::equal(side.begin(), side.end(), word.begin() + pos))
              hits.emplace_back(pos, ridx);
          }
        if (hits.empty()) break;
        auto [pos, ridx] =
            hits[std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(rng)];
        std::copy(rules[ridx].second.begin(), rules[ridx].second.end(),
                  word.begin() + pos);
        Word rewritten;
        for (Int g : word) rewritten.push_back(Letter{g, false});
        REQUIRE(group.equals(group.from_word(rewritten), reference));
      }
    }
  }
}

TEST_CASE("group laws", "[group][laws]") {
  GarsideGroup group(2);
  std::mt19937 rng(99991);
  std::uniform_int_distribution<Int> len(0, 8), gen(0, 2), coin(0, 1);
  auto random_element = [&]() {
    Word w;
    Int L = len(rng);
    for (Int k = 0; k < L; ++k)
      w.push_back(Letter{gen(rng), coin(rng) == 1 ? 1 : -1});
    return group.from_word(w);
  };
  for (int trial = 0; trial < 60; ++trial) {
    GroupElement a = random_element(), b = random_element(),
                 c = random_element();
    REQUIRE(group.equals(group.multiply(group.multiply(a, b), c),
                         group.multiply(a, group.multiply(b, c))));
    REQUIRE(group.is_identity(group.multiply(a, group.inverse(a))));
    REQUIRE(group.is_identity(group.multiply(group.inverse(a), a)));
    REQUIRE(group.equals(group.inverse(group.multiply(a, b)),
                         group.multiply(group.inverse(b), group.inverse(a))));
  }
}

TEST_CASE("normal forms are left weighted", "[group][normalform]") {
  GarsideGroup group(2);
  const Germ& germ = group.germ();
  std::mt19937 rng(5150);
  std::uniform_int_distribution<Int> len(1, 10), gen(0, 2);
  for (int trial = 0; trial < 80; ++trial) {
    Word w;
    Int L = len(rng);
    for (Int k = 0; k < L; ++k) w.push_back(Letter{gen(rng), false});
    GroupElement g = group.from_word(w);
    for (const GermElement& factor : g.body) {
      REQUIRE_FALSE(factor.perm.is_identity());
      REQUIRE_FALSE(factor.perm == germ.coxeter_perm());
    }
    for (std::size_t i = 0; i + 1 < g.body.size(); ++i) {
      // Nothing divides the right factor that could still extend the left
      // one inside Delta.
      for (const CtildeReflection& a : germ.atoms_dividing(g.body[i + 1], 2)) {
        auto extended = germ.product(g.body[i], a.elem);
        REQUIRE_FALSE(extended.has_value());
      }
    }
  }
}

TEST_CASE("delta conjugation is an automorphism on normal forms",
          "[group][delta]") {
  GarsideGroup group(2);
  std::mt19937 rng(31337);
  std::uniform_int_distribution<Int> len(1, 8), gen(0, 2);
  GroupElement d = group.delta(1);
  for (int trial = 0; trial < 40; ++trial) {
    Word w;
    Int L = len(rng);
    for (Int k = 0; k < L; ++k) w.push_back(Letter{gen(rng), false});
    GroupElement g = group.from_word(w);
    GroupElement lhs = group.multiply(d, g);
    GroupElement rhs = group.multiply(g, d);
    // Delta g = tau(g) Delta: same Delta exponent, same body length.
    REQUIRE(lhs.delta_power == rhs.delta_power);
    REQUIRE(lhs.body.size() == rhs.body.size());
  }
}

TEST_CASE("print/parse round trip for group elements", "[group][print]") {
  GarsideGroup group(2);
  std::mt19937 rng(8080);
  std::uniform_int_distribution<Int> len(0, 8), gen(0, 2), coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    Word w;
    Int L = len(rng);
    for (Int k = 0; k < L; ++k)
      w.push_back(Letter{gen(rng), coin(rng) == 1 ? 1 : -1});
    GroupElement g = group.from_word(w);
    REQUIRE(group.equals(group.parse(group.print(g)), g));
    // The original word also reparses to the same element.
    REQUIRE(group.equals(group.from_word(parse_word(word_text(w))), g));
  }
}

TEST_CASE("word parser accepts inverses and rejects junk", "[group][errors]") {
  Word w = parse_word("s0 s12^-1 s3");
  REQUIRE(w.size() == 3);
  REQUIRE(w[1].index == 12);
  REQUIRE(w[1].sign == -1);
  // Exponents abbreviate repetition.
  Word sq = parse_word("s0^2");
  REQUIRE(sq.size() == 2);
  REQUIRE((sq[0].index == 0 && sq[0].sign == 1 && sq[1].sign == 1));
  Word neg = parse_word("s1^-3");
  REQUIRE(neg.size() == 3);
  for (const Letter& l : neg) REQUIRE((l.index == 1 && l.sign == -1));
  REQUIRE_THROWS_AS(parse_word("t0"), ParseError);
  REQUIRE_THROWS_AS(parse_word("s"), ParseError);
  REQUIRE_THROWS_AS(parse_word("s0^"), ParseError);
  GarsideGroup group(2);
  REQUIRE_THROWS_AS(group.parse("D^x |"), ParseError);
  REQUIRE_THROWS_AS(group.normalize("s9"), std::invalid_argument);
}

TEST_CASE("presentation relations are sound", "[group][presentation]") {
  GarsideGroup group(2);
  std::vector<CtildeReflection> atoms;
  auto rels = group.presentation(1, &atoms);
  REQUIRE(atoms.size() == 11);
  REQUIRE_FALSE(rels.empty());
  const Germ& germ = group.germ();
  for (const auto& rel : rels) {
    // r t = (r t r^-1) r as germ products and as permutations.
    PeriodicPermutation lhs = compose(rel.r.elem.perm, rel.t.elem.perm);
    PeriodicPermutation rhs = compose(rel.rtr.elem.perm, rel.r2.elem.perm);
    REQUIRE(lhs == rhs);
    REQUIRE(rel.r2.elem.perm == rel.r.elem.perm);
    REQUIRE(germ.reflection_length_c(rel.rtr.elem) == 1);
    // Both sides are defined in the germ (length 2 products).
    auto p = germ.product(rel.r.elem, rel.t.elem);
    auto q = germ.product(rel.rtr.elem, rel.r2.elem);
    REQUIRE(p.has_value());
    REQUIRE(q.has_value());
    REQUIRE(p->perm == q->perm);
  }
}
