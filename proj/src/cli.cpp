#include "gha/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>

#include "gha/errors.hpp"
#include "gha/expr.hpp"
#include "gha/format.hpp"
#include "gha/morphisms.hpp"
#include "gha/structure.hpp"

namespace gha::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string f;
  std::string field = "Q";
  bool json = false;
  std::size_t degree_cap = kDefaultDegreeCap;

  std::string expr;
  std::string expr2;
  unsigned max_n = 5;
  std::string dx = "0";
  std::string dy = "0";
  std::string dh = "0";
};

std::string zh_text(const std::vector<Poly>& coefficients) {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coefficients[k]) + ")";
    if (k > 0) out += " * z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

class Commands {
 public:
  Commands(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    const FieldDesc field = parse_field(opt.field);
    ctx_ = Context::make(parse_poly(opt.f, field, DegreeCap{opt.degree_cap}), opt.degree_cap);
  }

  AlgebraElement element(const std::string& text) const { return parse_element(text, ctx_); }

  void emit(const AlgebraElement& a) const {
    if (opt_.json) {
      out_ << to_json(a).dump() << '\n';
    } else {
      out_ << to_string(a) << '\n';
    }
  }

  void nf() const { emit(element(opt_.expr)); }
  void commutator_cmd() const { emit(commutator(element(opt_.expr), element(opt_.expr2))); }
  void sigma() const { emit(sigma_h0(element(opt_.expr))); }

  void classify_cmd() const {
    const Classification c = classify(*ctx_);
    const bool center_z = c.center_description == CenterDescription::PolynomialInZ;
    if (opt_.json) {
      out_ << json{{"deg_f", c.deg_f},
                   {"is_domain", c.is_domain},
                   {"is_noetherian", c.is_noetherian},
                   {"is_generalized_down_up", c.is_generalized_down_up},
                   {"center_description", center_z ? "PolynomialInZ" : "NotComputedDegOne"}}
                  .dump()
           << '\n';
      return;
    }
    out_ << "deg f: " << c.deg_f << '\n'
         << "domain: " << std::boolalpha << c.is_domain << '\n'
         << "noetherian: " << c.is_noetherian << '\n'
         << "generalized down-up: " << c.is_generalized_down_up << '\n'
         << "center: " << (center_z ? "C[z]" : "not computed (deg f = 1)") << '\n';
  }

  void center() const {
    const auto p = center_membership(element(opt_.expr));
    if (opt_.json) {
      json j{{"member", p.has_value()}};
      if (p) j["poly"] = to_json(*p);
      out_ << j.dump() << '\n';
      return;
    }
    out_ << (p ? to_string(*p, "z") : std::string("none")) << '\n';
  }

  void zh_member() const {
    const auto p = zh_membership(element(opt_.expr));
    if (opt_.json) {
      json j{{"member", p.has_value()}};
      if (p) {
        json coefficients = json::array();
        for (std::size_t k = 0; k < p->size(); ++k) {
          if (!(*p)[k].is_zero()) coefficients.push_back({{"k", k}, {"poly", to_json((*p)[k])}});
        }
        j["coefficients"] = coefficients;
      }
      out_ << j.dump() << '\n';
      return;
    }
    out_ << (p ? zh_text(*p) : std::string("none")) << '\n';
  }

  void noetherian() const {
    const auto reports = noetherian_witness(*ctx_, opt_.max_n);
    json arr = json::array();
    for (const auto& r : reports) {
      if (opt_.json) {
        arr.push_back({{"n", r.n}, {"generator_gcd", to_json(r.generator_gcd)}, {"is_member", r.is_member}});
      } else {
        out_ << "n=" << r.n << ": gcd = " << to_string(r.generator_gcd)
             << "; h*y^" << r.n + 1 << (r.is_member ? " in I_" : " not in I_") << r.n << '\n';
      }
    }
    if (opt_.json) out_ << arr.dump() << '\n';
  }

  void gradings() const {
    const GradingFamily family = admissible_generator_gradings(*ctx_);
    if (opt_.json) {
      json gens = json::array();
      for (const auto& t : family.generators) gens.push_back({t.dx, t.dy, t.dh});
      out_ << json{{"generators", gens}}.dump() << '\n';
      return;
    }
    if (family.generators.empty()) {
      out_ << "only the trivial grading (0, 0, 0)\n";
      return;
    }
    for (std::size_t i = 0; i < family.generators.size(); ++i) {
      const auto& t = family.generators[i];
      out_ << (i == 0 ? "" : " + ") << "l" << (family.generators.size() > 1 ? std::to_string(i + 1) : "")
           << " * (" << t.dx << ", " << t.dy << ", " << t.dh << ")";
    }
    out_ << ", l in Z\n";
  }

  void aut() const {
    const AutGroup g = automorphism_group(*ctx_);
    if (opt_.json) {
      out_ << json{{"n", g.n},
                   {"cyclic_order", g.cyclic_order},
                   {"description", g.description()},
                   {"field", g.field.name()},
                   {"generator", {{"a", to_json(g.generator.a)}, {"b", to_json(g.generator.b)}}},
                   {"working_divisors", g.working_divisors}}
                  .dump()
           << '\n';
      return;
    }
    out_ << "Aut(H(f)) ≅ " << g.description() << "; generator: a=" << to_string(g.generator.a)
         << ", b=" << to_string(g.generator.b);
    if (!g.field.is_rationals()) out_ << " in " << g.field.name();
    out_ << '\n';
  }

  DerivationSpec derivation() const {
    return {ctx_, element(opt_.dx), element(opt_.dy), element(opt_.dh)};
  }

  void derivation_check() const {
    const bool ok = check_derivation(derivation());
    if (opt_.json) {
      out_ << json{{"is_derivation", ok}}.dump() << '\n';
    } else {
      out_ << std::boolalpha << ok << '\n';
    }
  }

  void derivation_classify() const {
    const auto lambda = classify_locally_finite(derivation());
    if (opt_.json) {
      json j{{"locally_finite", lambda.has_value()}};
      if (lambda) j["lambda"] = to_json(*lambda);
      out_ << j.dump() << '\n';
      return;
    }
    if (lambda) {
      out_ << "lambda = " << to_string(*lambda) << '\n';
    } else {
      out_ << "none: not a multiple of the diagonal derivation, so not locally finite\n";
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  ContextPtr ctx_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations in generalized Heisenberg algebras H(f)", "gha"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--f", opt.f, "defining polynomial in h, e.g. \"h^3 + h\"")->required();
  app.add_option("--field", opt.field, "Q or Q(zeta_m)")->capture_default_str();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--degree-cap", opt.degree_cap, "largest polynomial degree allowed")->capture_default_str();

  std::function<void(const Commands&)> action;
  auto sub = [&](const char* name, const char* help, void (Commands::*method)() const) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, method] { action = [method](const Commands& c) { (c.*method)(); }; });
    return s;
  };
  sub("nf", "normal form of an expression", &Commands::nf)->add_option("expr", opt.expr)->required();
  auto* comm = sub("commutator", "[e1, e2] = e1 e2 - e2 e1", &Commands::commutator_cmd);
  comm->add_option("e1", opt.expr)->required();
  comm->add_option("e2", opt.expr2)->required();
  sub("sigma", "sigma on H_0", &Commands::sigma)->add_option("expr", opt.expr)->required();
  sub("classify", "domain / Noetherian / down-up flags", &Commands::classify_cmd);
  sub("center", "decide membership in C[z]", &Commands::center)->add_option("expr", opt.expr)->required();
  sub("zh-member", "decide membership in C[z, h]", &Commands::zh_member)
      ->add_option("expr", opt.expr)
      ->required();
  sub("noetherian", "strict chain of left ideals I_n", &Commands::noetherian)
      ->add_option("--max-n", opt.max_n, "largest n")
      ->capture_default_str();
  sub("gradings", "generator-induced Z-gradings", &Commands::gradings);
  sub("aut", "automorphism group", &Commands::aut);
  for (auto [name, method] : {std::pair{"derivation-check", &Commands::derivation_check},
                              std::pair{"derivation-classify", &Commands::derivation_classify}}) {
    auto* s = sub(name, "derivation given by generator images", method);
    s->add_option("--dx", opt.dx, "image of x")->capture_default_str();
    s->add_option("--dy", opt.dy, "image of y")->capture_default_str();
    s->add_option("--dh", opt.dh, "image of h")->capture_default_str();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSyntaxError;
  }

  try {
    Commands commands(opt, out);
    action(commands);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "; expected one of:";
    for (const auto& t : e.expected()) err << ' ' << t;
    err << '\n';
    return kExitSyntaxError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace gha::cli
