#pragma once

// The Garside group of the sigma-fixed dual germ.
//
// Elements of the group generated by the germ P^sigma are kept in left
// greedy normal form Delta^k x_1 ... x_m with Delta = c, where every x_i is
// a nontrivial proper divisor of c and each pair (x_i, x_{i+1}) is
// left-weighted: no nontrivial divisor of x_{i+1} can be moved into x_i,
// i.e. gcd(complement(x_i), x_{i+1}) = 1.  The normal form is unique, which
// decides the word problem.
//
// The classical Artin-Tits generators of type C~n embed as
//   s_0 = (2n, 2n+1),  s_i = (i, i+1)(1-i, -i) for 0 < i < n,  s_n = (n, n+1),
// and c = s_0 s_2 s_4 ... followed by odd-index generators; inverses are
// handled through x^{-1} = Delta^{-1} * tau^{-1}(complement(x)).

#include "ctilde/germ.hpp"

namespace ctilde {

struct GroupElement {
  Int delta_power = 0;
  std::vector<GermElement> body;  // greedy normal form factors

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.delta_power != b.delta_power || a.body.size() != b.body.size())
      return false;
    for (std::size_t i = 0; i < a.body.size(); ++i)
      if (!(a.body[i].perm == b.body[i].perm)) return false;
    return true;
  }
};

// A positive or negative letter of a word in the classical generators.
struct Letter {
  Int index = 0;  // generator index in [0, n]
  int sign = 1;   // +1 or -1
};

using Word = std::vector<Letter>;

// Parse "s0 s1 s2^-1" style words; "s3^2" abbreviates "s3 s3".
inline Word parse_word(const std::string& text) {
  Word word;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> Int {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits)
      throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoll(text.substr(start, i - start));
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 's' && text[i] != 'S')
      throw ParseError("expected generator letter at position " +
                                  std::to_string(i));
    ++i;
    Int index = parse_int();
    if (index < 0)
      throw ParseError("generator index must be nonnegative");
    Int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = parse_int();
    }
    for (Int rep = 0; rep < std::abs(power); ++rep)
      word.push_back({index, power >= 0 ? 1 : -1});
    skip_ws();
  }
  return word;
}

class GarsideGroup {
 public:
  explicit GarsideGroup(Int n) : germ_(Germ::ctilde(n)) {
    if (n < 2)
      throw std::invalid_argument("rank must be at least 2");
  }

  const Germ& germ() const { return germ_; }
  Int rank() const { return germ_.rank(); }

  // Classical generator s_i, 0 <= i <= n.
  GermElement classical_generator(Int i) const {
    Int n = rank();
    if (i < 0 || i > n)
      throw std::invalid_argument("generator index out of range [0, n]");
    if (i == 0) return germ_.reflection(2 * n, 2 * n + 1).elem;
    return germ_.reflection(i, i + 1).elem;
  }

  GroupElement identity_element() const { return GroupElement{}; }

  GroupElement delta(Int power) const { return GroupElement{power, {}}; }

  GroupElement from_germ(const GermElement& x) const {
    return normal_form(0, {x});
  }

  GroupElement from_word(const Word& word) const {
    GroupElement g;
    for (const Letter& l : word) {
      GermElement gen = classical_generator(l.index);
      if (l.sign > 0)
        g = multiply(g, GroupElement{0, {gen}});
      else
        g = multiply(g, inverse_of_germ(gen));
    }
    return normal_form(g.delta_power, std::move(g.body));
  }

  GroupElement normalize(const std::string& word_text) const {
    return from_word(parse_word(word_text));
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    // Delta^ka A Delta^kb B = Delta^(ka+kb) tau^kb(A) B.
    std::vector<GermElement> body;
    body.reserve(a.body.size() + b.body.size());
    for (const GermElement& x : a.body) body.push_back(twist(x, b.delta_power));
    for (const GermElement& x : b.body) body.push_back(x);
    return normal_form(a.delta_power + b.delta_power, std::move(body));
  }

  GroupElement inverse(const GroupElement& g) const {
    GroupElement out;
    for (auto it = g.body.rbegin(); it != g.body.rend(); ++it)
      out = multiply(out, inverse_of_germ(*it));
    return multiply(out, delta(-g.delta_power));
  }

  bool equals(const GroupElement& a, const GroupElement& b) const {
    return a == b;  // normal forms are unique
  }

  bool is_identity(const GroupElement& g) const {
    return g.delta_power == 0 && g.body.empty();
  }

  // x^{-1} = Delta^{-1} tau^{-1}(complement(x)).
  GroupElement inverse_of_germ(const GermElement& x) const {
    if (x.perm.is_identity()) return identity_element();
    GermElement comp = germ_.complement(x);
    if (comp.perm.is_identity()) return delta(-1);  // x = c
    return GroupElement{-1, {germ_.garside_automorphism_inverse(comp)}};
  }

  // Greedy normal form of Delta^k x_1 ... x_m for arbitrary germ factors.
  GroupElement normal_form(Int delta_power, std::vector<GermElement> body) const {
    const PeriodicPermutation& cox = germ_.coxeter_perm();
    // Bubble passes: slide gcd(complement(x_i), x_{i+1}) leftwards until
    // every adjacent pair is left-weighted.
    bool changed = true;
    while (changed) {
      changed = false;
      body.erase(std::remove_if(body.begin(), body.end(),
                                [](const GermElement& x) {
                                  return x.perm.is_identity();
                                }),
                 body.end());
      for (std::size_t i = 0; i + 1 < body.size(); ++i) {
        if (body[i].perm == cox) continue;
        GermElement t = germ_.gcd(germ_.complement(body[i]), body[i + 1]);
        if (t.perm.is_identity()) continue;
        auto head = germ_.product(body[i], t);
        if (!head)
          throw std::logic_error("normal form slide failed to multiply");
        body[i] = std::move(*head);
        body[i + 1] = germ_.left_quotient(t, body[i + 1]);
        changed = true;
      }
    }
    // Leading Delta factors join the power.
    std::size_t lead = 0;
    while (lead < body.size() && body[lead].perm == cox) ++lead;
    delta_power += static_cast<Int>(lead);
    body.erase(body.begin(), body.begin() + lead);
    return GroupElement{delta_power, std::move(body)};
  }

  // tau^m applied to a germ element.
  GermElement twist(const GermElement& x, Int m) const {
    GermElement out = x;
    for (Int i = 0; i < std::abs(m); ++i)
      out = m > 0 ? germ_.garside_automorphism(out)
                  : germ_.garside_automorphism_inverse(out);
    return out;
  }

  // Text format "D^k | x1 . x2" with factors in cycle notation.
  std::string print(const GroupElement& g) const {
    std::string out = "D^" + std::to_string(g.delta_power) + " |";
    for (std::size_t i = 0; i < g.body.size(); ++i) {
      out += i ? " . " : " ";
      out += print_permutation(g.body[i].perm);
    }
    return out;
  }

  // Parse the normal form format back into a group element (renormalizing).
  GroupElement parse(const std::string& text) const {
    auto bar = text.find('|');
    auto caret = text.find('^');
    if (caret == std::string::npos || bar == std::string::npos || caret > bar)
      throw ParseError("expected \"D^k | ...\"");
    Int power = 0;
    try {
      std::size_t used = 0;
      std::string digits = text.substr(caret + 1, bar - caret - 1);
      power = std::stoll(digits, &used);
      while (used < digits.size() &&
             std::isspace(static_cast<unsigned char>(digits[used])))
        ++used;
      if (used != digits.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw ParseError("expected an integer delta power");
    }
    std::vector<GermElement> body;
    std::size_t pos = bar + 1;
    while (pos < text.size()) {
      auto dot = text.find('.', pos);
      std::string piece = text.substr(pos, dot == std::string::npos
                                               ? std::string::npos
                                               : dot - pos);
      bool blank = std::all_of(piece.begin(), piece.end(), [](char ch) {
        return std::isspace(static_cast<unsigned char>(ch));
      });
      if (!blank)
        body.push_back(germ_.element(parse_permutation(piece, germ_.period())));
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
    return normal_form(power, std::move(body));
  }

  // -------------------------------------------------------------------------
  // Dual presentation: generators are the window atoms, relations identify
  // r . t with (r t r^{-1}) . r whenever the germ product r t is defined.

  struct Relation {
    CtildeReflection r, t;    // left side r * t
    CtildeReflection rtr, r2; // right side (r t r^{-1}) * r
  };

  std::vector<Relation> presentation(Int window,
                                     std::vector<CtildeReflection>* atoms_out =
                                         nullptr) const {
    std::vector<CtildeReflection> atoms = germ_.all_reflections(window);
    std::vector<Relation> rels;
    for (const CtildeReflection& r : atoms) {
      for (const CtildeReflection& t : atoms) {
        if (r.elem.perm == t.elem.perm) continue;
        auto rt = germ_.product(r.elem, t.elem);
        if (!rt) continue;
        GermElement conj = germ_.element(conjugate(t.elem.perm, r.elem.perm));
        rels.push_back(
            Relation{r, t, germ_.classify_reflection_element(conj), r});
      }
    }
    if (atoms_out) *atoms_out = std::move(atoms);
    return rels;
  }

 private:
  Germ germ_;
};

}  // namespace ctilde
