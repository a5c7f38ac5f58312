#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "kummerlab/claims.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/expr.hpp"

using namespace kummer;

namespace {

struct Globals {
  bool json = false;
  std::string filter;
  int uniformizer_bound = 3;
  u64 enum_cap = 10000;
  u64 trial_div = 1000000;

  FactorOptions factor() const {
    FactorOptions o;
    o.trial_bound = trial_div;
    o.uniformizer_bound = uniformizer_bound;
    o.uniformizer_max_bound = std::max(uniformizer_bound, 6);
    return o;
  }
};

int emit(const Globals& g, const std::string& command, bool ok, Json result) {
  const Json env = envelope(command, ok, std::move(result));
  std::cout << (g.json ? render_json(env) : render_text(env));
  return ok ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

u64 to_u64(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

QuadOrder parse_theta(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw std::invalid_argument("--theta expects \"u,v\" for t^2 + u t + v");
  Integer u, v;
  if (u.set_str(parts[0], 10) != 0 || v.set_str(parts[1], 10) != 0)
    throw std::invalid_argument("--theta expects two integers");
  for (const auto& o : quad_catalog().orders)
    if (o.u() == u && o.v() == v) return o;
  return QuadOrder(u, v);
}

std::vector<u64> parse_subgroup(const std::string& s) {
  std::vector<u64> h;
  for (const auto& t : split(s, ',')) h.push_back(to_u64(t));
  return h;
}

const JacobiMap& select_map(const std::vector<JacobiMap>& maps, const std::string& xi) {
  for (const auto& m : maps)
    if (m.label() == xi || (m.f == 1 && std::to_string(m.xi.prime_field_value()) == xi)) return m;
  throw std::invalid_argument("no map with xi = " + xi);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kummer ideal numbers via Jacobi maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit JSON");
  app.add_option("--filter", g.filter, "comma-separated claim groups or id prefixes (reproduce)");
  app.add_option("--uniformizer-bound", g.uniformizer_bound, "coefficient bound for the uniformizer search")
      ->capture_default_str()->check(CLI::Range(1, 50));
  app.add_option("--enum-cap", g.enum_cap, "enumeration cap for monoid searches")->capture_default_str();
  app.add_option("--trial-div", g.trial_div, "trial-division limit for norms")->capture_default_str();

  std::function<int()> action;

  unsigned lambda = 0, order = 0, periods = 0;
  u64 p = 0, m = 0;
  long long i = 1, k = 1;
  std::string xi, expr1, expr2, subgroup = "1", theta;
  bool all = false;

  auto* maps = app.add_subcommand("maps", "list the Jacobi maps of Z[a] over p");
  maps->add_option("--lambda", lambda)->required();
  maps->add_option("--p", p)->required();
  maps->add_option("--periods", periods, "period count e for the u-vector (default: decomposition field)");
  maps->callback([&] {
    action = [&] {
      Json out = Json::array();
      for (const auto& mp : enumerate_jacobi_maps(lambda, p)) {
        Json j = to_json(mp);
        const unsigned e = periods ? periods : (lambda - 1) / mp.f;
        if ((lambda - 1) % e == 0 && e * mp.f == lambda - 1) j["u"] = period_residues(mp, gaussian_periods(lambda, e));
        j["kernel_hnf"] = kernel(mp).lattice.to_string();
        out.push_back(j);
      }
      return emit(g, "maps", true, {{"lambda", lambda}, {"p", p}, {"maps", out}});
    };
  });

  auto* factor = app.add_subcommand("factor", "factor an element of Z[a] into ideal primes");
  factor->add_option("--lambda", lambda)->required();
  factor->add_option("element", expr1)->required();
  factor->callback([&] {
    action = [&] {
      const CycElt x = parse_cyclotomic(expr1, CycRing::of(lambda));
      return emit(g, "factor", true, to_json(factorize(x, g.factor())));
    };
  });

  auto* valuation = app.add_subcommand("valuation", "Kummer multiplicity of an element at one map");
  valuation->add_option("--lambda", lambda)->required();
  valuation->add_option("--p", p)->required();
  valuation->add_option("--xi", xi, "image of a, or the factor label for maps of degree > 1")->required();
  valuation->add_option("element", expr1)->required();
  valuation->callback([&] {
    action = [&] {
      const CycElt x = parse_cyclotomic(expr1, CycRing::of(lambda));
      const auto all_maps = enumerate_jacobi_maps(lambda, p);
      const JacobiMap& mp = select_map(all_maps, xi);
      const FactorOptions o = g.factor();
      const KummerPrime kp = make_kummer_prime(mp, o.uniformizer_bound, o.uniformizer_max_bound);
      const int mu = multiplicity(x, kp), oracle = valuation_oracle(x, mp);
      return emit(g, "valuation", mu == oracle,
                  {{"element", to_json(x)}, {"prime", to_json(kp)}, {"mu", mu}, {"oracle", oracle}});
    };
  });

  auto* divides_cmd = app.add_subcommand("divides", "decide whether d divides x in Z[a]");
  divides_cmd->add_option("--lambda", lambda)->required();
  divides_cmd->add_option("d", expr1)->required();
  divides_cmd->add_option("x", expr2)->required();
  divides_cmd->callback([&] {
    action = [&] {
      const CycRing R = CycRing::of(lambda);
      const CycElt d = parse_cyclotomic(expr1, R), x = parse_cyclotomic(expr2, R);
      const DivisibilityVerdict v = divisibility(d, x, g.factor());
      Json r{{"d", to_json(d)}, {"x", to_json(x)}, {"by_division", v.by_division}, {"by_valuations", v.by_valuations},
             {"divides", v.by_division}};
      if (v.quotient) r["quotient"] = to_json(*v.quotient);
      return emit(g, "divides", v.by_division == v.by_valuations, r);
    };
  });

  auto* jac = app.add_subcommand("jacobi-sum", "J(chi^i, chi^k) for a character of the given order mod p");
  jac->add_option("--p", p)->required();
  jac->add_option("--order", order)->required();
  jac->add_option("--i", i)->capture_default_str();
  jac->add_option("--k", k)->capture_default_str();
  jac->callback([&] {
    action = [&] {
      const Character chi(p, order);
      const CycElt j = jacobi_sum(chi, i, k);
      Json r{{"p", p}, {"order", order}, {"i", i}, {"k", k}, {"generator", chi.generator()}, {"J", to_json(j)},
             {"psi", to_json(jacobi_psi(chi, i, k))}};
      bool ok = true;
      if ((i + k) % static_cast<long long>(order) != 0) {
        const auto refl = reflection_identity(chi, i, k);
        r["reflection"] = to_json(refl);
        ok = refl.holds;
      } else {
        r["reflection"] = "degenerate index";
      }
      return emit(g, "jacobi-sum", ok, r);
    };
  });

  auto* gauss = app.add_subcommand("gauss-sum", "(a^i, x)^lambda and its descent to Z[a]");
  gauss->add_option("--lambda", lambda)->required();
  gauss->add_option("--p", p)->required();
  gauss->add_option("--i", i)->capture_default_str();
  gauss->callback([&] {
    action = [&] {
      const GaussSumRing G(lambda, p);
      const DescentReport d = gauss_power_descent(G, i);
      Json r{{"lambda", lambda}, {"p", p}, {"i", i}, {"descent", to_json(d)}};
      bool ok = d.substitution_invariant;
      if (lambda > 1 && (2 * i) % lambda != 0) {
        const auto rel = gauss_jacobi_relation(Character(p, lambda), i, i);
        r["relation"] = to_json(rel);
        ok = ok && rel.product_matches;
      }
      return emit(g, "gauss-sum", ok, r);
    };
  });

  auto* fc = app.add_subcommand("fc-check", "fundamental congruence mod p");
  fc->add_option("--p", p)->required();
  fc->add_option("--i", i);
  fc->add_option("--k", k);
  fc->add_flag("--all", all, "every admissible (i, k)");
  fc->callback([&] {
    action = [&] {
      if (!all) {
        const FcReport r = fc_check(p, i, k);
        return emit(g, "fc-check", r.holds, to_json(r));
      }
      Json cases = Json::array();
      bool ok = true;
      for (const auto& r : fc_check_all(p)) {
        ok = ok && r.holds;
        cases.push_back(to_json(r));
      }
      return emit(g, "fc-check", ok, {{"p", p}, {"cases", cases}});
    };
  });

  auto* stick = app.add_subcommand("stickelberger", "ideal-prime divisor of J(chi, chi)");
  stick->add_option("--lambda", lambda)->required();
  stick->add_option("--p", p)->required();
  stick->callback([&] {
    action = [&] {
      const auto r = stickelberger_check(lambda, p);
      return emit(g, "stickelberger", r.holds, to_json(r));
    };
  });

  auto* quartic = app.add_subcommand("quartic", "quartic Jacobi sum for p = 1 mod 4");
  quartic->add_option("--p", p)->required();
  quartic->callback([&] {
    action = [&] {
      const auto r = quartic_demo(p);
      return emit(g, "quartic", r.norm_ok && r.congruence_ok, to_json(r));
    };
  });

  auto* binom = app.add_subcommand("binomial", "2a = +-C(2n, n) mod p for p = a^2 + 4b^2");
  binom->add_option("--p", p)->required();
  binom->callback([&] {
    action = [&] {
      const auto r = binomial_congruence(p);
      return emit(g, "binomial", r.holds, to_json(r));
    };
  });

  auto* monoid = app.add_subcommand("monoid", "Hilbert monoids and the singular monoid N");
  monoid->add_option("--m", m, "modulus");
  monoid->add_option("--subgroup", subgroup, "residues of H, comma separated")->capture_default_str();
  monoid->require_subcommand(1);
  u64 ma = 0, mb = 0, mp = 0;
  auto hilbert = [&] {
    if (m == 0) throw std::invalid_argument("--m is required");
    return ResidueMonoid::hilbert(m, parse_subgroup(subgroup));
  };
  auto* mfactor = monoid->add_subcommand("factor", "irreducible and ideal factorizations");
  mfactor->add_option("a", ma)->required();
  mfactor->callback([&] {
    action = [&] {
      const ResidueMonoid M = hilbert();
      if (!M.contains(ma)) throw std::invalid_argument(std::to_string(ma) + " is not in " + M.describe());
      Json r{{"monoid", M.describe()}, {"a", ma}};
      r["irreducible_factorizations"] = factor_into_irreducibles(M, ma, true, g.enum_cap);
      try {
        Json primes = Json::array();
        for (const auto& ip : ideal_factorization(M, ma))
          primes.push_back({{"p", ip.p}, {"exponent", ip.exponent}, {"class", ip.cls}, {"principal", ip.principal}});
        r["ideal_primes"] = primes;
      } catch (const MathError& e) {
        r["ideal_primes"] = e.what();
      }
      return emit(g, "monoid factor", true, r);
    };
  });
  auto* mclass = monoid->add_subcommand("classgroup", "class group of the monoid");
  mclass->callback([&] {
    action = [&] {
      const ClassGroup c = class_group(hilbert());
      return emit(g, "monoid classgroup", c.law_well_defined, to_json(c));
    };
  });
  auto* mdef = monoid->add_subcommand("defined-at", "is phi_p defined at a/b");
  mdef->add_option("p", mp)->required();
  mdef->add_option("a", ma)->required();
  mdef->add_option("b", mb)->required();
  mdef->callback([&] {
    action = [&] {
      const ResidueMonoid M = hilbert();
      const DefinedAt d = defined_at(M, mp, Integer(static_cast<unsigned long>(ma)),
                                     Integer(static_cast<unsigned long>(mb)), g.enum_cap);
      return emit(g, "monoid defined-at", true, to_json(d));
    };
  });
  auto* msing = monoid->add_subcommand("demo-singular", "the singular monoid N of residues 0, 1, 2 mod 4");
  msing->callback([&] {
    action = [&] {
      const SingularReport r = singular_demo(g.enum_cap);
      return emit(g, "monoid demo-singular", r.holds, to_json(r));
    };
  });

  auto* quad = app.add_subcommand("quad", "quadratic orders Z[t], t^2 + u t + v = 0");
  quad->add_option("--theta", theta, "\"u,v\"")->required();
  quad->require_subcommand(1);
  auto* qmaps = quad->add_subcommand("maps", "Jacobi maps over p");
  qmaps->add_option("--p", p)->required();
  qmaps->callback([&] {
    action = [&] {
      const QuadOrder O = parse_theta(theta);
      Json out = Json::array();
      for (const auto& mq : enumerate_quad_maps(O, p)) out.push_back(to_json(mq));
      return emit(g, "quad maps", true, {{"order", O.name()}, {"p", p}, {"maps", out}});
    };
  });
  auto* qb2 = quad->add_subcommand("check-b2", "is each map over p defined at num/den or den/num");
  qb2->add_option("--p", p)->required();
  qb2->add_option("num", expr1)->required();
  qb2->add_option("den", expr2)->required();
  qb2->callback([&] {
    action = [&] {
      const QuadOrder O = parse_theta(theta);
      const QuadElt b = parse_quad(expr1, O), c = parse_quad(expr2, O);
      Json out = Json::array();
      bool any_singular = false;
      for (const auto& mq : enumerate_quad_maps(O, p)) {
        const B2Check r = b_doubleprime_check(O, mq, b, c);
        any_singular = any_singular || r.singular();
        out.push_back({{"map", mq.label()}, {"check", to_json(r)}});
      }
      return emit(g, "quad check-b2", true,
                  {{"order", O.name()}, {"num", to_json(b)}, {"den", to_json(c)}, {"maps", out}, {"singular", any_singular}});
    };
  });
  auto* qcond = quad->add_subcommand("conductor", "conductor and integral-closure witnesses");
  qcond->callback([&] {
    action = [&] {
      const QuadOrder O = parse_theta(theta);
      Json ws = Json::array();
      for (const auto& w : integral_witnesses(O))
        ws.push_back({{"ell", w.ell}, {"beta", to_json(w.beta)}, {"gamma", to_json(w.gamma)}});
      return emit(g, "quad conductor", true,
                  {{"order", O.name()}, {"discriminant", O.discriminant().get_str()}, {"conductor", conductor(O).get_str()},
                   {"integrally_closed", is_integrally_closed(O)}, {"witnesses", ws}});
    };
  });
  auto* qgl = quad->add_subcommand("gauss-lemma", "reducibility of T^2 + c1 T + c0 over K and over O");
  qgl->add_option("coefficients", expr1, "\"c1,c0\"")->required();
  qgl->callback([&] {
    action = [&] {
      const QuadOrder O = parse_theta(theta);
      const auto parts = split(expr1, ',');
      if (parts.size() != 2) throw std::invalid_argument("gauss-lemma expects \"c1,c0\"");
      const QuadElt c1 = parse_quad(parts[0], O), c0 = parse_quad(parts[1], O);
      return emit(g, "quad gauss-lemma", true,
                  {{"order", O.name()}, {"c1", to_json(c1)}, {"c0", to_json(c0)}, {"result", to_json(gauss_lemma_check(O, c1, c0))}});
    };
  });

  auto* repro = app.add_subcommand("reproduce", "run every worked example and acceptance criterion");
  repro->callback([&] {
    action = [&] {
      ClaimOptions opts;
      opts.factor = g.factor();
      opts.enum_cap = g.enum_cap;
      int passed = 0, failed = 0;
      for (const auto& c : all_claims()) {
        if (!claim_matches(c, g.filter)) continue;
        const ClaimOutcome o = run_claim(c, opts);
        (o.pass ? passed : failed)++;
        if (g.json) {
          std::cout << to_json(o).dump() << '\n';
        } else {
          std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " [" << c.group << "] " << c.statement << '\n';
          if (!o.error.empty()) std::cout << "  error: " << o.error << '\n';
        }
      }
      if (!g.json) std::cout << passed << " passed, " << failed << " failed\n";
      std::cout.flush();
      return failed ? 1 : 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 1;
  } catch (const MathError& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 1;
  }
}
