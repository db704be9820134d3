// Command-line front end: normalization, equality, lattice operations,
// enumeration, presentation emission, Hurwitz orbits, centralizer reports
// and SVG strip diagrams.
//
// Exit codes: 0 success, 1 domain error (non-member input, undefined
// operation) or a false `eq`, 2 parse error (input does not match a
// documented grammar).

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctilde/centralizer.hpp"
#include "ctilde/draw.hpp"
#include "ctilde/garside.hpp"
#include "ctilde/hurwitz.hpp"

using json = nlohmann::ordered_json;
using namespace ctilde;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Group input: a word in the classical generators, a "D^k | ..." normal
// form, or a germ element in cycle syntax.
GroupElement parse_group_input(const GarsideGroup& group, const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) return group.identity_element();
  if (s.find('|') != std::string::npos || s[0] == 'D') return group.parse(s);
  if (s.find('s') != std::string::npos) return group.from_word(parse_word(s));
  return group.from_germ(group.germ().element(s));
}

json element_json(const Germ& germ, const GermElement& e) {
  json j;
  j["cycles"] = print_permutation(e.perm);
  j["partition"] = print_partition(e.partition);
  j["length_a"] = e.length_a;
  j["sigma_stable"] = e.sigma_stable;
  if (germ.strip().is_odd_even() && e.sigma_stable)
    j["length_c"] = germ.reflection_length_c(e);
  return j;
}

json group_json(const GarsideGroup& group, const GroupElement& g) {
  json j;
  j["normal_form"] = group.print(g);
  j["delta_power"] = g.delta_power;
  json body = json::array();
  for (const GermElement& x : g.body) body.push_back(print_permutation(x.perm));
  j["body"] = body;
  return j;
}

// A reflection may be named by a single transposition (a,b); paired
// reflections are lifted to their two-cycle germ element automatically.
CtildeReflection parse_reflection(const Germ& germ, const std::string& text) {
  PeriodicPermutation p = parse_permutation(text, germ.period());
  auto cycles = cycle_decomposition(p);
  if (cycles.size() == 1 && cycles[0].entries.size() == 2 && cycles[0].shift == 0) {
    auto r = germ.try_reflection(cycles[0].entries[0], cycles[0].entries[1]);
    if (r) return *r;
  }
  return germ.classify_reflection_element(germ.element(p));
}

std::string print_tuple(const ReflectionTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += " ; ";
    out += print_permutation(t.entries[i].elem.perm);
  }
  return out;
}

int emit_error(const std::string& kind, const std::string& message, bool as_json) {
  if (as_json) {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  return kind == "parse" ? 2 : 1;
}

struct Common {
  Int n = 2;
  Int window = 2;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format = "text") {
  c.format = default_format;
  sub->add_option("-n,--rank", c.n, "rank of the affine type C group")
      ->check(CLI::Range(2, 64));
  sub->add_option("-K,--window", c.window, "offset window for enumerations")
      ->check(CLI::Range(1, 64));
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "svg"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual Garside structure for Artin-Tits groups of affine type C"};
  app.require_subcommand(1);

  Common c_norm, c_eq, c_lcm, c_gcd, c_div, c_atoms, c_divs, c_pres, c_hur,
      c_cent, c_draw;
  std::string in_a, in_b;
  std::string hur_tuple, hur_decomps, hur_classify;
  Int hur_move = 0, hur_dir = 1;
  bool hur_rotate = false;
  Int hur_cap = 100000;
  Int cent_h = 1;
  bool cent_list = false;
  Int draw_period = 0;
  std::vector<Int> draw_xres;

  CLI::App* norm = app.add_subcommand("normalize", "Garside normal form");
  add_common(norm, c_norm);
  norm->add_option("input", in_a, "word, normal form, or cycles")->required();

  CLI::App* eq = app.add_subcommand("eq", "decide equality; exit 0 iff equal");
  add_common(eq, c_eq);
  eq->add_option("a", in_a)->required();
  eq->add_option("b", in_b)->required();

  CLI::App* lcm_cmd = app.add_subcommand("lcm", "least common multiple in the germ");
  add_common(lcm_cmd, c_lcm);
  lcm_cmd->add_option("a", in_a)->required();
  lcm_cmd->add_option("b", in_b)->required();

  CLI::App* gcd_cmd = app.add_subcommand("gcd", "greatest common divisor in the germ");
  add_common(gcd_cmd, c_gcd);
  gcd_cmd->add_option("a", in_a)->required();
  gcd_cmd->add_option("b", in_b)->required();

  CLI::App* div_cmd = app.add_subcommand("divides", "does a divide b in the germ?");
  add_common(div_cmd, c_div);
  div_cmd->add_option("a", in_a)->required();
  div_cmd->add_option("b", in_b)->required();

  CLI::App* atoms_cmd = app.add_subcommand("atoms", "reflections dividing an element");
  add_common(atoms_cmd, c_atoms);
  atoms_cmd->add_option("x", in_a)->required();

  CLI::App* divs_cmd = app.add_subcommand("divisors", "window-bounded divisor enumeration");
  add_common(divs_cmd, c_divs);
  divs_cmd->add_option("x", in_a)->required();

  CLI::App* pres_cmd = app.add_subcommand("present", "dual presentation on window atoms");
  add_common(pres_cmd, c_pres);

  CLI::App* hur_cmd = app.add_subcommand("hurwitz", "Hurwitz moves, orbits, classification");
  add_common(hur_cmd, c_hur);
  hur_cmd->add_option("tuple", hur_tuple, "reflection tuple \"(..) ; (..) ; ..\"");
  hur_cmd->add_option("--decomps", hur_decomps, "list reduced decompositions of an element");
  hur_cmd->add_option("--classify", hur_classify, "conjugate a reflection into W' or W''");
  hur_cmd->add_option("--move", hur_move, "apply one Hurwitz move at this index");
  hur_cmd->add_option("--dir", hur_dir, "move direction")->check(CLI::IsMember({-1, 1}));
  hur_cmd->add_flag("--rotate", hur_rotate, "apply the rotation operator (target c)");
  hur_cmd->add_option("--cap", hur_cap, "orbit size cap");

  CLI::App* cent_cmd = app.add_subcommand("centralize", "fixed subgerm of c^h report");
  add_common(cent_cmd, c_cent);
  cent_cmd->add_option("power", cent_h, "power of c")->required();
  cent_cmd->add_flag("--list", cent_list, "also list the fixed elements");

  CLI::App* draw_cmd = app.add_subcommand("draw", "SVG strip diagram of an element");
  add_common(draw_cmd, c_draw, "svg");
  draw_cmd->add_option("x", in_a)->required();
  draw_cmd->add_option("--period", draw_period, "strip period (custom strips)");
  draw_cmd->add_option("--xres", draw_xres, "X residues of a custom strip")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return 2;
  }

  const Common& common = *[&]() -> const Common* {
    if (*norm) return &c_norm;
    if (*eq) return &c_eq;
    if (*lcm_cmd) return &c_lcm;
    if (*gcd_cmd) return &c_gcd;
    if (*div_cmd) return &c_div;
    if (*atoms_cmd) return &c_atoms;
    if (*divs_cmd) return &c_divs;
    if (*pres_cmd) return &c_pres;
    if (*hur_cmd) return &c_hur;
    if (*cent_cmd) return &c_cent;
    return &c_draw;
  }();
  bool as_json = common.format == "json";

  try {
    if (*norm || *eq) {
      GarsideGroup group(common.n);
      if (*norm) {
        GroupElement g = parse_group_input(group, in_a);
        if (as_json) {
          json j = group_json(group, g);
          j["n"] = common.n;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << group.print(g) << "\n";
        }
        return 0;
      }
      GroupElement a = parse_group_input(group, in_a);
      GroupElement b = parse_group_input(group, in_b);
      bool equal = group.equals(a, b);
      if (as_json) {
        json j;
        j["equal"] = equal;
        j["normal_form_a"] = group.print(a);
        j["normal_form_b"] = group.print(b);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (equal ? "equal" : "different") << "\n";
      }
      return equal ? 0 : 1;
    }

    if (*lcm_cmd || *gcd_cmd || *div_cmd) {
      Germ germ = Germ::ctilde(common.n);
      GermElement a = germ.element(in_a);
      GermElement b = germ.element(in_b);
      if (*div_cmd) {
        bool yes = germ.divides(a, b);
        if (as_json) {
          json j;
          j["divides"] = yes;
          if (yes)
            j["quotient"] = print_permutation(germ.left_quotient(a, b).perm);
          std::cout << j.dump() << "\n";
        } else {
          std::cout << (yes ? "yes" : "no") << "\n";
        }
        return 0;
      }
      GermElement r = *lcm_cmd ? germ.lcm(a, b) : germ.gcd(a, b);
      if (as_json) {
        json j = element_json(germ, r);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << print_permutation(r.perm) << "\n";
      }
      return 0;
    }

    if (*atoms_cmd || *divs_cmd) {
      Germ germ = Germ::ctilde(common.n);
      GermElement x = germ.element(in_a);
      if (*atoms_cmd) {
        bool truncated = false;
        auto atoms = germ.atoms_dividing(x, common.window, &truncated);
        if (as_json) {
          json j;
          j["window"] = common.window;
          j["truncated"] = truncated;
          j["count"] = atoms.size();
          json list = json::array();
          for (const auto& r : atoms) {
            json e = element_json(germ, r.elem);
            e["long"] = r.is_long;
            list.push_back(e);
          }
          j["atoms"] = list;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "window: " << common.window << "\n"
                    << "truncated: " << (truncated ? "true" : "false") << "\n"
                    << "count: " << atoms.size() << "\n";
          for (const auto& r : atoms)
            std::cout << print_permutation(r.elem.perm) << "\n";
        }
      } else {
        auto divisors = germ.bounded_divisors(x, common.window);
        if (as_json) {
          json j;
          j["window"] = common.window;
          j["complete"] = !x.partition.has_infinite();
          j["count"] = divisors.size();
          json list = json::array();
          for (const auto& e : divisors) list.push_back(print_permutation(e.perm));
          j["divisors"] = list;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "window: " << common.window << "\n"
                    << "complete: "
                    << (x.partition.has_infinite() ? "false" : "true") << "\n"
                    << "count: " << divisors.size() << "\n";
          for (const auto& e : divisors)
            std::cout << print_permutation(e.perm) << "\n";
        }
      }
      return 0;
    }

    if (*pres_cmd) {
      GarsideGroup group(common.n);
      std::vector<CtildeReflection> atoms;
      auto rels = group.presentation(common.window, &atoms);
      if (as_json) {
        json j;
        j["window"] = common.window;
        j["atom_count"] = atoms.size();
        j["relation_count"] = rels.size();
        json a = json::array();
        for (const auto& r : atoms) a.push_back(print_permutation(r.elem.perm));
        j["atoms"] = a;
        json rl = json::array();
        for (const auto& r : rels) {
          json e;
          e["lhs"] = {print_permutation(r.r.elem.perm), print_permutation(r.t.elem.perm)};
          e["rhs"] = {print_permutation(r.rtr.elem.perm), print_permutation(r.r2.elem.perm)};
          rl.push_back(e);
        }
        j["relations"] = rl;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "window: " << common.window << "\n"
                  << "atoms: " << atoms.size() << "\n"
                  << "relations: " << rels.size() << "\n";
        for (const auto& r : atoms)
          std::cout << "atom: " << print_permutation(r.elem.perm) << "\n";
        for (const auto& r : rels)
          std::cout << print_permutation(r.r.elem.perm) << " . "
                    << print_permutation(r.t.elem.perm) << " = "
                    << print_permutation(r.rtr.elem.perm) << " . "
                    << print_permutation(r.r2.elem.perm) << "\n";
      }
      return 0;
    }

    if (*hur_cmd) {
      Germ germ = Germ::ctilde(common.n);
      if (!hur_classify.empty()) {
        CtildeReflection rho = parse_reflection(germ, hur_classify);
        ClassifiedReflection cls = classify_reflection(germ, rho);
        if (as_json) {
          json j;
          j["input"] = print_permutation(rho.elem.perm);
          j["power"] = cls.power;
          j["target"] = print_permutation(cls.target.elem.perm);
          j["in_w_prime"] = cls.in_w_prime;
          j["in_w_second"] = cls.in_w_second;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "power: " << cls.power << "\n"
                    << "target: " << print_permutation(cls.target.elem.perm) << "\n"
                    << "in_w_prime: " << (cls.in_w_prime ? "true" : "false") << "\n"
                    << "in_w_second: " << (cls.in_w_second ? "true" : "false") << "\n";
        }
        return 0;
      }
      if (!hur_decomps.empty()) {
        GermElement w = germ.element(hur_decomps);
        bool truncated = false;
        auto tuples = reduced_decompositions(germ, w, common.window, &truncated);
        if (as_json) {
          json j;
          j["window"] = common.window;
          j["truncated"] = truncated;
          j["count"] = tuples.size();
          json list = json::array();
          for (const auto& t : tuples) list.push_back(print_tuple(t));
          j["decompositions"] = list;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "window: " << common.window << "\n"
                    << "truncated: " << (truncated ? "true" : "false") << "\n"
                    << "count: " << tuples.size() << "\n";
          for (const auto& t : tuples) std::cout << print_tuple(t) << "\n";
        }
        return 0;
      }
      if (hur_tuple.empty())
        throw std::invalid_argument(
            "hurwitz needs a tuple, --decomps or --classify");
      std::vector<CtildeReflection> entries;
      std::stringstream ss(hur_tuple);
      std::string piece;
      while (std::getline(ss, piece, ';')) {
        piece = trim(piece);
        if (piece.empty()) throw ParseError("empty tuple entry");
        entries.push_back(parse_reflection(germ, piece));
      }
      if (entries.empty()) throw ParseError("empty tuple");
      PeriodicPermutation prod(germ.period());
      for (const auto& r : entries) prod = compose(prod, r.elem.perm);
      ReflectionTuple start = ctilde::make_tuple(germ, entries, germ.element(prod));
      if (hur_move != 0) {
        ReflectionTuple moved = hurwitz_move(germ, start, hur_move, hur_dir);
        std::cout << print_tuple(moved) << "\n";
        return 0;
      }
      if (hur_rotate) {
        ReflectionTuple rotated = rotate(germ, start);
        std::cout << print_tuple(rotated) << "\n";
        return 0;
      }
      OrbitReport report = hurwitz_orbit(germ, start, common.window, hur_cap);
      if (as_json) {
        json j;
        j["window"] = common.window;
        j["size"] = report.tuples.size();
        j["capped"] = report.capped;
        j["window_limited"] = report.window_limited;
        json list = json::array();
        for (const auto& t : report.tuples) list.push_back(print_tuple(t));
        j["orbit"] = list;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "window: " << common.window << "\n"
                  << "size: " << report.tuples.size() << "\n"
                  << "capped: " << (report.capped ? "true" : "false") << "\n"
                  << "window_limited: "
                  << (report.window_limited ? "true" : "false") << "\n";
        for (const auto& t : report.tuples) std::cout << print_tuple(t) << "\n";
      }
      return 0;
    }

    if (*cent_cmd) {
      Germ germ = Germ::ctilde(common.n);
      if (cent_h < 1) throw std::invalid_argument("h must be positive");
      CentralizerReport rep = verify_centralizer_type(germ, cent_h, common.window);
      if (as_json) {
        json j;
        j["n"] = rep.n;
        j["h"] = rep.h;
        j["gcd"] = rep.g;
        j["window"] = rep.window;
        j["fixed_count"] = rep.fixed_count;
        j["typec_count"] = rep.typec_count;
        j["fixed_atoms"] = rep.fixed_atom_count;
        j["typec_atoms"] = rep.typec_atom_count;
        j["gcd_sets_equal"] = rep.gcd_sets_equal;
        j["counts_match"] = rep.counts_match;
        j["lattice_isomorphic"] = rep.lattice_isomorphic;
        j["verified"] = rep.verified();
        if (cent_list) {
          json list = json::array();
          for (const auto& e : fixed_subgerm(germ, cent_h, common.window))
            list.push_back(print_permutation(e.perm));
          j["fixed"] = list;
        }
        std::cout << j.dump() << "\n";
      } else {
        auto flag = [](bool b) { return b ? "true" : "false"; };
        std::cout << "n: " << rep.n << "\nh: " << rep.h << "\ngcd: " << rep.g
                  << "\nwindow: " << rep.window
                  << "\nfixed_count: " << rep.fixed_count
                  << "\ntypec_count: " << rep.typec_count
                  << "\nfixed_atoms: " << rep.fixed_atom_count
                  << "\ntypec_atoms: " << rep.typec_atom_count
                  << "\ngcd_sets_equal: " << flag(rep.gcd_sets_equal)
                  << "\ncounts_match: " << flag(rep.counts_match)
                  << "\nlattice_isomorphic: " << flag(rep.lattice_isomorphic)
                  << "\nverified: " << flag(rep.verified()) << "\n";
        if (cent_list)
          for (const auto& e : fixed_subgerm(germ, cent_h, common.window))
            std::cout << print_permutation(e.perm) << "\n";
      }
      return 0;
    }

    // draw
    Strip strip = draw_period > 0
                      ? (draw_xres.empty() ? Strip::one_line(draw_period)
                                           : Strip(draw_period, draw_xres))
                      : Strip::odd_even(2 * common.n);
    Germ germ(strip);
    GermElement x = germ.element(in_a);
    if (common.format == "text") {
      std::cout << print_permutation(x.perm) << "\n"
                << print_partition(x.partition) << "\n";
    } else {
      std::cout << draw_svg(germ, x);
    }
    return 0;
  } catch (const ParseError& e) {
    return emit_error("parse", e.what(), as_json);
  } catch (const std::invalid_argument& e) {
    return emit_error("domain", e.what(), as_json);
  } catch (const std::logic_error& e) {
    return emit_error("domain", e.what(), as_json);
  }
}
