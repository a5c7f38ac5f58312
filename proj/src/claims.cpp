#include "kummerlab/claims.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "kummerlab/errors.hpp"
#include "kummerlab/expr.hpp"

namespace kummer {

namespace {

/// Bounded list of failure descriptions for reports.
class Failures {
 public:
  void add(const std::string& s) {
    ++count_;
    if (shown_.size() < 10) shown_.push_back(s);
  }
  bool none() const { return count_ == 0; }
  Json json() const { return {{"count", count_}, {"first", shown_}}; }

 private:
  long long count_ = 0;
  std::vector<std::string> shown_;
};

ClaimResult verdict(bool pass, Json detail = Json::object()) { return {pass, std::move(detail)}; }

CycElt cyc(unsigned n, const std::string& s) { return parse_cyclotomic(s, CycRing::of(n)); }

/// Engine output reduced by hand so that the sequence is identical on every
/// standard library.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<u64>(hi - lo + 1));
}

CycElt random_element(std::mt19937_64& rng, const CycRing& R, long lo, long hi) {
  while (true) {
    IntVec c(R.degree());
    for (auto& v : c) v = draw(rng, lo, hi);
    CycElt x = R.from_coeffs(std::move(c));
    if (!x.is_zero()) return x;
  }
}

JacobiMap map_with_xi(unsigned lambda, u64 p, u64 xi) {
  for (const auto& m : enumerate_jacobi_maps(lambda, p))
    if (m.f == 1 && m.xi.prime_field_value() == xi) return m;
  throw MathError("no degree-one map with xi = " + std::to_string(xi));
}

// ---- acceptance criteria -------------------------------------------------

ClaimResult census(const ClaimOptions&) {
  Failures bad;
  long long checked = 0;
  for (unsigned lambda : {3u, 5u, 7u, 11u, 13u})
    for (u64 p : primes_below(200)) {
      const std::size_t got = enumerate_jacobi_maps(lambda, p).size();
      const u64 want = p == lambda ? 1 : (lambda - 1) / multiplicative_order(p % lambda, lambda);
      ++checked;
      if (got != want)
        bad.add("lambda=" + std::to_string(lambda) + " p=" + std::to_string(p) + ": " + std::to_string(got) +
                " maps, expected " + std::to_string(want));
    }
  return verdict(bad.none(), {{"pairs", checked}, {"failures", bad.json()}});
}

ClaimResult fc_exhaustive(const ClaimOptions&) {
  Failures bad;
  long long checked = 0, psi_agree = 0;
  for (u64 p : {5ul, 7ul, 11ul, 13ul})
    for (const auto& r : fc_check_all(p)) {
      ++checked;
      if (r.holds_for_psi) ++psi_agree;
      if (!r.holds)
        bad.add("p=" + std::to_string(p) + " i=" + std::to_string(r.i) + " k=" + std::to_string(r.k));
    }
  return verdict(bad.none(), {{"cases", checked},
                              {"convention", "J = -psi"},
                              {"cases_also_true_for_psi", psi_agree},
                              {"failures", bad.json()}});
}

ClaimResult reflection_all(const ClaimOptions&) {
  Failures bad;
  long long checked = 0;
  for (u64 p : primes_below(51)) {
    if (p < 3) continue;
    for (unsigned lambda = 2; lambda <= p - 1; ++lambda) {
      if ((p - 1) % lambda) continue;
      const Character chi(p, lambda);
      for (unsigned i = 1; i < lambda; ++i)
        for (unsigned k = 1; k < lambda; ++k) {
          if ((i + k) % lambda == 0) continue;
          ++checked;
          if (!reflection_identity(chi, i, k).holds)
            bad.add("p=" + std::to_string(p) + " lambda=" + std::to_string(lambda) + " i=" + std::to_string(i) +
                    " k=" + std::to_string(k));
        }
    }
  }
  return verdict(bad.none(), {{"cases", checked}, {"failures", bad.json()}});
}

ClaimResult stickelberger_all(const ClaimOptions&) {
  Json reports = Json::array();
  bool ok = true;
  for (auto [l, p] : std::vector<std::pair<unsigned, u64>>{{3, 7}, {3, 13}, {5, 11}, {5, 31}, {7, 29}}) {
    const auto r = stickelberger_check(l, p);
    ok = ok && r.holds;
    Json v = Json::array();
    for (const auto& e : r.entries) v.push_back(e.kummer);
    reports.push_back({{"lambda", l}, {"p", p}, {"xi", r.xi}, {"valuations", v}, {"holds", r.holds}});
  }
  return verdict(ok, {{"cases", reports}});
}

ClaimResult quartic_all(const ClaimOptions&) {
  Json cases = Json::array();
  bool ok = true;
  for (u64 p : {5ul, 13ul, 17ul, 29ul}) {
    const auto q = quartic_demo(p);
    const auto b = binomial_congruence(p);
    ok = ok && q.norm_ok && q.congruence_ok && b.holds;
    cases.push_back({{"p", p}, {"quartic", to_json(q)}, {"binomial", to_json(b)}});
  }
  return verdict(ok, {{"cases", cases}});
}

struct Corpus {
  unsigned lambda;
  std::vector<CycElt> elements;
};

/// 500 pseudorandom elements per lambda with coefficients in [-4, 4].
const std::vector<Corpus>& agreement_corpus() {
  static const std::vector<Corpus> corpus = [] {
    std::vector<Corpus> out;
    for (unsigned lambda : {3u, 5u, 7u}) {
      std::mt19937_64 rng(0x6b756d6d6572ULL + lambda);
      Corpus c{lambda, {}};
      for (int n = 0; n < 500; ++n) c.elements.push_back(random_element(rng, CycRing::of(lambda), -4, 4));
      out.push_back(std::move(c));
    }
    return out;
  }();
  return corpus;
}

ClaimResult kummer_vs_oracle(const ClaimOptions& opts) {
  Failures mismatch, additivity, ultrametric, interval, finiteness;
  long long pairs = 0;
  for (const auto& c : agreement_corpus()) {
    const unsigned lambda = c.lambda;
    std::vector<KummerPrime> primes;
    std::vector<KernelPowers> oracles;
    for (u64 p : primes_below(51))
      for (const auto& m : enumerate_jacobi_maps(lambda, p)) {
        primes.push_back(make_kummer_prime(m, opts.factor.uniformizer_bound, opts.factor.uniformizer_max_bound));
        oracles.emplace_back(m);
      }
    auto tag = [&](const CycElt& x, const KummerPrime& k) {
      return "lambda=" + std::to_string(lambda) + " x=" + x.to_string() + " map " + std::to_string(k.map.p) + ":" +
             k.map.label();
    };
    const auto& xs = c.elements;
    for (std::size_t n = 0; n < xs.size(); ++n) {
      const CycElt& x = xs[n];
      const CycElt& y = xs[(n + 1) % xs.size()];
      const CycElt xy = x * y, s = x + y;
      const Integer nx = abs(norm(x));
      for (std::size_t j = 0; j < primes.size(); ++j) {
        const KummerPrime& k = primes[j];
        const int mu = multiplicity(x, k);
        ++pairs;
        if (mu != oracles[j].valuation(x)) mismatch.add(tag(x, k));
        if (mu > valuation_of(nx, k.q()) * static_cast<int>(lambda - 1)) finiteness.add(tag(x, k));
        const int muy = multiplicity(y, k);
        if (multiplicity(xy, k) != mu + muy) additivity.add(tag(x, k));
        if (!s.is_zero() && multiplicity(s, k) < std::min(mu, muy)) ultrametric.add(tag(x, k));
        const auto prof = divisibility_profile(x, k, mu + 2);
        for (int m = 0; m <= mu + 2; ++m)
          if (prof[static_cast<std::size_t>(m)] != (m <= mu)) {
            interval.add(tag(x, k));
            break;
          }
      }
    }
  }
  const bool ok = mismatch.none() && additivity.none() && ultrametric.none() && interval.none() && finiteness.none();
  return verdict(ok, {{"element_map_pairs", pairs},
                      {"mismatch", mismatch.json()},
                      {"additivity", additivity.json()},
                      {"ultrametric", ultrametric.json()},
                      {"interval", interval.json()},
                      {"norm_bound", finiteness.json()}});
}

ClaimResult norm_consistency(const ClaimOptions& opts) {
  Failures bad;
  long long elements = 0, records = 0;
  for (const auto& c : agreement_corpus()) {
    PrimeCache cache(c.lambda, opts.factor.uniformizer_bound, opts.factor.uniformizer_max_bound);
    for (const auto& x : c.elements) {
      ++elements;
      try {
        records += static_cast<long long>(factorize(x, opts.factor, &cache).records.size());
      } catch (const MathError& e) {
        bad.add(x.to_string() + ": " + e.what());
      }
    }
  }
  return verdict(bad.none(), {{"elements", elements}, {"records", records}, {"failures", bad.json()}});
}

ClaimResult completeness(const ClaimOptions& opts) {
  Failures disagree, not_integral, defined_routes;
  long long divisible = 0, all_defined = 0;
  std::mt19937_64 rng(0x636f6d706c657465ULL);
  const unsigned lambdas[] = {3, 5, 7};
  std::vector<PrimeCache> caches;
  for (unsigned l : lambdas) caches.emplace_back(l, opts.factor.uniformizer_bound, opts.factor.uniformizer_max_bound);
  for (int n = 0; n < 200; ++n) {
    const std::size_t li = static_cast<std::size_t>(n) % 3;
    const CycRing R = CycRing::of(lambdas[li]);
    const CycElt y = random_element(rng, R, -2, 2);
    const CycElt x = n % 2 ? random_element(rng, R, -3, 3) : y * random_element(rng, R, -2, 2);
    const DivisibilityVerdict v = divisibility(y, x, opts.factor, &caches[li]);
    if (v.by_division != v.by_valuations) disagree.add("x=" + x.to_string() + " y=" + y.to_string());
    if (v.by_division) ++divisible;
    bool every = true;
    const Integer ny = abs(norm(y));
    if (ny != 1)
      for (const auto& [p, e] : factor_integer(ny, opts.factor.trial_bound))
        for (const auto& k : caches[li].primes_over(p.get_ui())) {
          const bool d = is_defined_at(x, y, k);
          if (d != is_defined_at_oracle(x, y, k.map)) defined_routes.add("x=" + x.to_string() + " y=" + y.to_string());
          every = every && d;
        }
    if (every) {
      ++all_defined;
      if (!v.quotient || !(*v.quotient * y == x)) not_integral.add("x=" + x.to_string() + " y=" + y.to_string());
    }
  }
  const bool ok = disagree.none() && not_integral.none() && defined_routes.none();
  return verdict(ok, {{"pairs", 200},
                      {"divisible", divisible},
                      {"all_maps_defined", all_defined},
                      {"route_disagreement", disagree.json()},
                      {"defined_route_disagreement", defined_routes.json()},
                      {"non_integral_quotient", not_integral.json()}});
}

ClaimResult monoid_suite(const ClaimOptions& opts) {
  const u64 cap = opts.enum_cap;
  const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
  Json d;
  const auto f441 = factor_into_irreducibles(M, 441, true, cap);
  const bool fact_ok = f441 == std::vector<std::vector<u64>>{{9, 49}, {21, 21}};
  d["factorizations_441"] = f441;
  const auto a = defined_at(M, 3, 9, 21, cap), b = defined_at(M, 3, 9, 441, cap), c = defined_at(M, 3, 9, 9261, cap);
  const bool def_ok = a.defined && b.defined && !c.defined;
  d["phi3_at_9_21"] = to_json(a);
  d["phi3_at_9_21sq"] = to_json(b);
  d["phi3_at_9_21cube"] = to_json(c);
  bool mu_ok = multiplicity_monoid(M, 3, 9, 21, cap) == 2;
  Failures indep;
  for (u64 x = 1; x <= 1000; ++x) {
    if (!M.contains(x)) continue;
    const int want = valuation_of(Integer(static_cast<unsigned long>(x)), Integer(3));
    for (u64 q : {21ul, 33ul, 57ul})
      if (multiplicity_monoid(M, 3, Integer(static_cast<unsigned long>(x)), q, cap) != want)
        indep.add("a=" + std::to_string(x) + " q=" + std::to_string(q));
  }
  mu_ok = mu_ok && indep.none();
  d["multiplicity_3_in_9"] = multiplicity_monoid(M, 3, 9, 21, cap);
  d["uniformizer_independence"] = indep.json();
  const ClassGroup cg = class_group(M);
  d["class_group_order"] = cg.order;
  Failures sq;
  for (auto [m, H] : std::vector<std::pair<u64, std::vector<u64>>>{{4, {1}}, {5, {1, 4}}, {8, {1}}, {5, {1}}}) {
    const ResidueMonoid Mh = ResidueMonoid::hilbert(m, H);
    for (u64 x = 1; x <= 10000; ++x) {
      if (!Mh.contains(x)) continue;
      const SquareTest t = square_test(Mh, x);
      if (t.square_in_M != t.square_in_QM) sq.add(Mh.describe() + " a=" + std::to_string(x));
    }
  }
  d["square_test_mismatch"] = sq.json();
  const SingularReport s = singular_demo(cap);
  d["singular"] = to_json(s);
  const bool ok = fact_ok && def_ok && mu_ok && cg.order == 2 && sq.none() && s.holds;
  return verdict(ok, d);
}

ClaimResult singular_orders(const ClaimOptions&) {
  Json d;
  const QuadOrder O(0, 3, "Z[sqrt(-3)]");
  bool ok = true;
  const auto maps2 = enumerate_quad_maps(O, 2);
  const B2Check w = b_doubleprime_check(O, maps2.at(0), {1, 1}, {2, 0});
  ok = ok && maps2.size() == 1 && w.singular();
  d["phi2_at_(1+t)/2"] = to_json(w);
  const PrimeSquareReport ps = prime_square_anomaly();
  ok = ok && ps.holds;
  d["prime_square"] = to_json(ps);
  const Integer f = conductor(O);
  ok = ok && f == 2;
  d["conductor"] = f.get_str();
  const GaussLemma g = gauss_lemma_check(O, {1, 0}, {1, 0});
  ok = ok && g.reducible_over_K && !g.reducible_over_O;
  d["gauss_lemma_T2+T+1"] = to_json(g);
  Json pis = Json::array();
  for (u64 p : {2ul, 3ul, 5ul}) {
    const Integer P(static_cast<unsigned long>(p));
    const QuadOrder Zpi(0, P * P, "Z[" + std::to_string(p) + "i]");
    const auto maps = enumerate_quad_maps(Zpi, p);
    const B2Check c = b_doubleprime_check(Zpi, maps.at(0), {0, 1}, {P, 0});
    ok = ok && maps.size() == 1 && c.singular();
    pis.push_back({{"p", p}, {"check", to_json(c)}});
  }
  d["pi_over_p"] = pis;
  // Maximal-order controls: 200 fractions, every map with p <= 30.
  Failures controls;
  long long checked = 0;
  std::mt19937_64 rng(0x717561646f726473ULL);
  for (const auto& o : quad_catalog().orders) {
    if (!is_integrally_closed(o)) continue;
    std::vector<QuadJacobiMap> maps;
    for (u64 p : primes_below(31))
      for (auto& m : enumerate_quad_maps(o, p)) maps.push_back(std::move(m));
    for (int n = 0; n < 200; ++n) {
      QuadElt beta{draw(rng, -9, 9), draw(rng, -9, 9)}, gamma{draw(rng, -9, 9), draw(rng, -9, 9)};
      if (beta.is_zero()) beta = {1, 1};
      if (gamma.is_zero()) gamma = {2, 1};
      for (const auto& m : maps) {
        ++checked;
        if (b_doubleprime_check(o, m, beta, gamma).singular())
          controls.add(o.name() + " " + to_string(beta) + "/" + to_string(gamma) + " at " + m.label());
      }
    }
  }
  ok = ok && controls.none();
  d["maximal_controls"] = {{"checks", checked}, {"singular_witnesses", controls.json()}};
  return verdict(ok, d);
}

ClaimResult descent_all(const ClaimOptions&) {
  Json cases = Json::array();
  bool ok = true;
  for (auto [l, p] : std::vector<std::pair<unsigned, u64>>{{2, 5}, {3, 7}, {3, 13}, {5, 11}}) {
    const GaussSumRing G(l, p);
    const DescentReport r = gauss_power_descent(G, 1);
    ok = ok && r.substitution_invariant;
    cases.push_back({{"lambda", l}, {"p", p}, {"descent", to_json(r)}});
  }
  return verdict(ok, {{"cases", cases}});
}

// ---- worked examples -----------------------------------------------------

std::vector<Claim> build() {
  std::vector<Claim> v;
  auto add = [&](std::string id, std::string group, std::string statement, int criterion,
                 std::function<ClaimResult(const ClaimOptions&)> fn) {
    v.push_back({std::move(id), std::move(group), std::move(statement), criterion, std::move(fn)});
  };

  add("cyclotomic.phi", "cyclotomic", "Phi_5, Phi_1, Phi_12", 0, [](const ClaimOptions&) {
    const auto a = cyclotomic_polynomial(5).to_string('X'), b = cyclotomic_polynomial(1).to_string('X'),
               c = cyclotomic_polynomial(12).to_string('X');
    return verdict(a == "X^4 + X^3 + X^2 + X + 1" && b == "X - 1" && c == "X^4 - X^2 + 1",
                   {{"phi5", a}, {"phi1", b}, {"phi12", c}});
  });
  add("cyclotomic.norms", "cyclotomic", "N(1-a) = 5, N(2+a) = 11, N(3) = 81 for lambda = 5", 0,
      [](const ClaimOptions&) {
        const Integer a = norm(cyc(5, "1-a")), b = norm(cyc(5, "2+a")), c = norm(cyc(5, "3"));
        const bool res = norm_by_resultant(cyc(5, "2+a")) == b;
        return verdict(a == 5 && b == 11 && c == 81 && res,
                       {{"N(1-a)", a.get_str()}, {"N(2+a)", b.get_str()}, {"N(3)", c.get_str()}});
      });
  add("cyclotomic.conjugates", "cyclotomic", "sigma_2(sigma_2(a)) = a^4 = -1 - a - a^2 - a^3 for lambda = 5", 0,
      [](const ClaimOptions&) {
        const CycElt x = conjugate(conjugate(cyc(5, "a"), 2), 2);
        return verdict(x == cyc(5, "-1-a-a^2-a^3"), {{"value", to_json(x)}});
      });
  add("cyclotomic.periods", "cyclotomic", "lambda = 5, e = 2: eta_0 = a + a^4, eta_1 = a^2 + a^3; a is not a period sum",
      0, [](const ClaimOptions&) {
        const PeriodSystem ps = gaussian_periods(5, 2);
        const bool ok = ps.periods[0] == cyc(5, "a+a^4") && ps.periods[1] == cyc(5, "a^2+a^3") &&
                        express_in_periods(cyc(5, "-1"), ps).has_value() &&
                        !express_in_periods(cyc(5, "a"), ps).has_value();
        return verdict(ok, {{"eta0", to_json(ps.periods[0])}, {"eta1", to_json(ps.periods[1])}});
      });
  add("maps.split", "maps", "lambda = 5, p = 11: four maps with xi in {3,4,5,9}", 0, [](const ClaimOptions&) {
    std::vector<u64> xs;
    for (const auto& m : enumerate_jacobi_maps(5, 11)) xs.push_back(m.xi.prime_field_value());
    std::vector<u64> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    return verdict(sorted == std::vector<u64>{3, 4, 5, 9}, {{"xi", xs}});
  });
  add("maps.inert", "maps", "lambda = 5, p = 2: one map onto F_16, kernel index 16", 0, [](const ClaimOptions&) {
    const auto ms = enumerate_jacobi_maps(5, 2);
    const Integer idx = kernel(ms.at(0)).lattice.index();
    return verdict(ms.size() == 1 && ms[0].f == 4 && idx == 16, {{"maps", ms.size()}, {"index", idx.get_str()}});
  });
  add("maps.ramified", "maps", "lambda = 5, p = 5: one map a -> 1 with 1 - a in its kernel of index 5", 0,
      [](const ClaimOptions&) {
        const auto ms = enumerate_jacobi_maps(5, 5);
        const auto k = kernel(ms.at(0));
        return verdict(ms.size() == 1 && ms[0].xi.prime_field_value() == 1 && apply(ms[0], cyc(5, "1-a")).is_zero() &&
                           k.lattice.index() == 5,
                       {{"map", to_json(ms[0])}});
      });
  add("maps.residues", "maps", "lambda = 5, p = 11, xi = 3: apply(2+a) = 5, period residues (3,9,4,5)", 0,
      [](const ClaimOptions&) {
        const JacobiMap m = map_with_xi(5, 11, 3);
        const auto u = period_residues(m, gaussian_periods(5, 4));
        const u64 img = apply(m, cyc(5, "2+a")).prime_field_value();
        return verdict(img == 5 && u == std::vector<u64>{3, 9, 4, 5}, {{"apply", img}, {"residues", u}});
      });
  add("maps.period-roots", "maps", "lambda = 5, e = 2, p = 19: residues are the roots {4,14} of X^2 + X - 1", 0,
      [](const ClaimOptions&) {
        Json us = Json::array();
        bool ok = true;
        for (const auto& m : enumerate_jacobi_maps(5, 19)) {
          auto u = period_residues(m, gaussian_periods(5, 2));
          std::vector<u64> s = u;
          std::sort(s.begin(), s.end());
          ok = ok && s == std::vector<u64>{4, 14};
          us.push_back(u);
        }
        return verdict(ok && us.size() == 2, {{"residues", us}});
      });
  add("valuation.uniformizers", "valuation",
      "2+a certifies at xi = 9 (p = 11); a-3 is rejected at xi = 3; 1-a certifies the ramified prime of lambda = 3",
      0, [](const ClaimOptions&) {
        const JacobiMap m9 = map_with_xi(5, 11, 9), m3 = map_with_xi(5, 11, 3);
        const PeriodSystem ps = gaussian_periods(5, 4);
        const auto good = certify_uniformizer(m9, ps, 2, IntVec{1, 0, 0, 0});
        const auto bad = certify_uniformizer(m3, ps, -3, IntVec{1, 0, 0, 0});
        const JacobiMap r = enumerate_jacobi_maps(3, 3).at(0);
        const auto ram = certify_uniformizer(r, decomposition_periods(r), 1, IntVec{-1, 0});
        Json d{{"2+a", good.has_value()}, {"a-3", bad.has_value()}, {"1-a", ram.has_value()}};
        if (good) d["period_norm_2+a"] = good->period_norm.get_str();
        if (ram) d["period_norm_1-a"] = ram->period_norm.get_str();
        return verdict(good && !bad && ram && good->period_norm == 11 && ram->period_norm == 3, d);
      });
  add("valuation.multiplicity", "valuation", "lambda = 5: mu(11) = 1 at all four maps over 11; mu((1-a)^4) = mu(5) = 4 "
      "at the ramified prime", 0, [](const ClaimOptions& o) {
        bool ok = true;
        Json d;
        for (const auto& m : enumerate_jacobi_maps(5, 11)) {
          const KummerPrime k = make_kummer_prime(m, o.factor.uniformizer_bound, o.factor.uniformizer_max_bound);
          ok = ok && multiplicity(cyc(5, "11"), k) == 1 && valuation_oracle(cyc(5, "11"), m) == 1;
        }
        const JacobiMap r = enumerate_jacobi_maps(5, 5).at(0);
        const KummerPrime k = make_kummer_prime(r);
        d["mu_(1-a)^4"] = multiplicity(cyc(5, "(1-a)^4"), k);
        d["mu_5"] = multiplicity(cyc(5, "5"), k);
        d["oracle_a"] = valuation_oracle(cyc(5, "a"), r);
        ok = ok && d["mu_(1-a)^4"] == 4 && d["mu_5"] == 4 && d["oracle_a"] == 0;
        const JacobiMap m7 = map_with_xi(3, 7, 2);
        const int a = multiplicity(cyc(3, "3+a"), make_kummer_prime(m7)), b = valuation_oracle(cyc(3, "3+a"), m7);
        d["lambda3_p7_3+a"] = {a, b};
        return verdict(ok && a == b, d);
      });
  add("valuation.factorize", "valuation", "lambda = 5: 1 is a unit, 1-a is the ramified prime once, 2+a is (p=11, xi=9)",
      0, [](const ClaimOptions& o) {
        const auto f1 = factorize(cyc(5, "1"), o.factor), fa = factorize(cyc(5, "1-a"), o.factor),
                   fb = factorize(cyc(5, "2+a"), o.factor);
        int fb_hits = 0;
        bool fb_ok = true;
        for (const auto& r : fb.records) {
          if (r.mu) ++fb_hits;
          if (r.mu && r.prime->map.xi.prime_field_value() != 9) fb_ok = false;
        }
        const bool ok = f1.records.empty() && fa.records.size() == 1 && fa.records[0].mu == 1 &&
                        fa.records[0].prime->map.ramified() && fb_hits == 1 && fb_ok;
        return verdict(ok, {{"1-a", to_json(fa)}, {"2+a", to_json(fb)}});
      });
  add("valuation.divides", "valuation", "lambda = 5: (1-a) | 5, (1-a)^5 does not divide 5, (2+a) | 11", 0,
      [](const ClaimOptions& o) {
        const bool a = divides(cyc(5, "1-a"), cyc(5, "5"), o.factor);
        const bool b = divides(cyc(5, "(1-a)^5"), cyc(5, "5"), o.factor);
        const bool c = divides(cyc(5, "2+a"), cyc(5, "11"), o.factor);
        const auto q = exact_quotient(cyc(5, "11"), cyc(5, "2+a"));
        return verdict(a && !b && c && q && *q == cofactor(cyc(5, "2+a")),
                       {{"(1-a)|5", a}, {"(1-a)^5|5", b}, {"(2+a)|11", c}});
      });
  add("valuation.defined-at", "valuation", "lambda = 5, p = 11, xi = 9: the map is defined at 11/(2+a)", 0,
      [](const ClaimOptions&) {
        const JacobiMap m = map_with_xi(5, 11, 9);
        const bool a = is_defined_at(cyc(5, "11"), cyc(5, "2+a"), make_kummer_prime(m));
        const bool b = is_defined_at_oracle(cyc(5, "11"), cyc(5, "2+a"), m);
        return verdict(a && b, {{"kummer", a}, {"oracle", b}});
      });
  add("charsum.jacobi", "charsum", "p = 13, order 4: J(chi,chi) = a + b i with a^2 + b^2 = 13", 0,
      [](const ClaimOptions&) {
        const CycElt j = jacobi_sum(Character(13, 4), 1, 1);
        return verdict(j[0] * j[0] + j[1] * j[1] == 13, {{"J", to_json(j)}});
      });
  add("charsum.order-two", "charsum", "p = 7, order 2: i = k = 1 has i + k = 0 mod 2; J = chi(-1) = -1 and J sigma(J) = 1",
      0, [](const ClaimOptions&) {
        const CycElt j = jacobi_sum(Character(7, 2), 1, 1);
        bool threw = false;
        try {
          (void)reflection_identity(Character(7, 2), 1, 1);
        } catch (const MathError&) {
          threw = true;
        }
        return verdict(j == CycRing::of(2).integer(-1) && threw,
                       {{"J", to_json(j)}, {"product", to_json(j * conjugate(j, -1))}, {"degenerate_rejected", threw}});
      });
  add("charsum.reflection", "charsum", "J sigma_{-1}(J) = p for (11,5,1,1), (13,3,1,1), (13,12,3,4)", 0,
      [](const ClaimOptions&) {
        Json cases = Json::array();
        bool ok = true;
        for (auto [p, l, i, k] : std::vector<std::tuple<u64, unsigned, int, int>>{{11, 5, 1, 1}, {13, 3, 1, 1}, {13, 12, 3, 4}}) {
          const auto r = reflection_identity(Character(p, l), i, k);
          ok = ok && r.holds;
          cases.push_back(to_json(r));
        }
        return verdict(ok, {{"cases", cases}});
      });
  add("charsum.gauss-jacobi", "charsum", "lambda = 5, p = 11: (a,x)(a,x) = psi (a^2,x) with psi = -J", 0,
      [](const ClaimOptions&) {
        const auto r = gauss_jacobi_relation(Character(11, 5), 1, 1);
        const GaussSumRing G(3, 7);
        const bool trivial = gauss_sum(G, 0) == G.embed(CycRing::of(3).integer(-1));
        return verdict(r.product_matches && trivial, {{"relation", to_json(r)}, {"trivial_sum_is_-1", trivial}});
      });
  add("charsum.fc", "charsum", "FC: p = 13, (3,4) gives 0; (8,9) gives 35 = 9 mod 13", 0, [](const ClaimOptions&) {
    const auto a = fc_check(13, 3, 4), b = fc_check(13, 8, 9);
    return verdict(a.holds && a.expected == 0 && b.holds && b.expected == 9 && b.binomial_quotient == 35,
                   {{"3,4", to_json(a)}, {"8,9", to_json(b)}});
  });
  add("charsum.quartic", "charsum", "p = 13: J = -3 + 2i up to units, C(6,3)/2 = 10 = -3 mod 13", 0,
      [](const ClaimOptions&) {
        const auto q = quartic_demo(13);
        return verdict(q.norm_ok && q.congruence_ok && q.half_binomial == 10, to_json(q));
      });
  add("charsum.binomial", "charsum", "2a = +-C(2n,n) mod p for p = 5, 13, 29", 0, [](const ClaimOptions&) {
    Json cases = Json::array();
    bool ok = true;
    for (u64 p : {5ul, 13ul, 29ul}) {
      const auto b = binomial_congruence(p);
      ok = ok && b.holds;
      cases.push_back(to_json(b));
    }
    return verdict(ok, {{"cases", cases}});
  });
  add("charsum.descent-valuations", "charsum",
      "lambda v_t(J) = 2 v_t((a,x)^lambda) - v_t((a^2,x)^lambda) for lambda = 3, p = 7, 13", 0,
      [](const ClaimOptions&) {
        Json cases = Json::array();
        bool ok = true;
        for (u64 p : {7ul, 13ul}) {
          const auto r = descent_valuations(3, p);
          ok = ok && r.consistent;
          cases.push_back({{"p", p}, {"report", to_json(r)}});
        }
        return verdict(ok, {{"cases", cases}});
      });
  add("monoid.factor", "monoid", "m = 4: 9 is irreducible; 441 has ideal exponents 3^2 7^2; 5 is principal", 0,
      [](const ClaimOptions& o) {
        const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
        const bool irr = factor_into_irreducibles(M, 9, true, o.enum_cap) == std::vector<std::vector<u64>>{{9}};
        const auto f = ideal_factorization(M, 441);
        const auto g = ideal_factorization(M, 5);
        const bool ok = irr && f.size() == 2 && f[0].p == 3 && f[0].exponent == 2 && f[1].p == 7 &&
                        f[1].exponent == 2 && g.size() == 1 && g[0].principal;
        return verdict(ok, {{"9_irreducible", irr}});
      });
  add("monoid.uniformizer", "monoid", "m = 4: q = 21 for p = 3, q = 5 for p = 5, 9 is not a uniformizer", 0,
      [](const ClaimOptions&) {
        const ResidueMonoid M = ResidueMonoid::hilbert(4, {1});
        const u64 a = uniformizer(M, 3), b = uniformizer(M, 5);
        return verdict(a == 21 && b == 5 && !is_uniformizer(M, 3, 9), {{"p3", a}, {"p5", b}});
      });
  add("monoid.class-groups", "monoid", "Cl(4,{1}) = C2, Cl(5,G) trivial, Cl(8,{1}) = C2 x C2", 0,
      [](const ClaimOptions&) {
        const auto a = class_group(ResidueMonoid::hilbert(4, {1})), b = class_group(ResidueMonoid::hilbert(5, {1, 2, 3, 4})),
                   c = class_group(ResidueMonoid::hilbert(8, {1}));
        const bool ok = a.structure() == "C2" && b.order == 1 && c.structure() == "C2 x C2" && a.law_well_defined &&
                        b.law_well_defined && c.law_well_defined;
        return verdict(ok, {{"m4", a.structure()}, {"m5", b.structure()}, {"m8", c.structure()}});
      });
  add("quad.maps", "quad", "Z[sqrt(-3)] has one map over 2; Z[i] has t -> 2, 3 over 5; Z[3i] has t -> 0 over 3", 0,
      [](const ClaimOptions&) {
        const auto a = enumerate_quad_maps(QuadOrder(0, 3), 2), b = enumerate_quad_maps(QuadOrder(0, 1), 5),
                   c = enumerate_quad_maps(QuadOrder(0, 9), 3);
        const bool ok = a.size() == 1 && a[0].theta.prime_field_value() == 1 && b.size() == 2 &&
                        b[0].theta.prime_field_value() == 2 && b[1].theta.prime_field_value() == 3 && c.size() == 1 &&
                        c[0].theta.prime_field_value() == 0;
        return verdict(ok, {{"Z[sqrt(-3)]", a.size()}, {"Z[i]", b.size()}, {"Z[3i]", c.size()}});
      });
  add("quad.conductors", "quad", "conductors 2, 1, 3 for Z[sqrt(-3)], Z[i], Z[3i]; Z[zeta_3] integrally closed", 0,
      [](const ClaimOptions&) {
        const Integer a = conductor(QuadOrder(0, 3)), b = conductor(QuadOrder(0, 1)), c = conductor(QuadOrder(0, 9));
        const bool z3 = is_integrally_closed(QuadOrder(1, 1));
        return verdict(a == 2 && b == 1 && c == 3 && z3,
                       {{"Z[sqrt(-3)]", a.get_str()}, {"Z[i]", b.get_str()}, {"Z[3i]", c.get_str()}});
      });
  add("quad.integral", "quad", "Z[i]: defined at 1+i; T^2 - 4 over Z[i] splits in O", 0, [](const ClaimOptions&) {
    const QuadOrder O(0, 1);
    bool ok = true;
    for (u64 p : {2ul, 3ul, 5ul})
      for (const auto& m : enumerate_quad_maps(O, p)) ok = ok && b_doubleprime_check(O, m, {1, 1}, {1, 0}).at_x;
    const GaussLemma g = gauss_lemma_check(O, {0, 0}, {-4, 0});
    return verdict(ok && g.reducible_over_K && g.reducible_over_O, {{"T^2-4", to_json(g)}});
  });
  add("quad.integral-witnesses", "quad",
      "every catalogued integral element outside O has a map defined neither at it nor at its inverse", 0,
      [](const ClaimOptions&) {
        Json cases = Json::array();
        bool ok = true;
        for (const auto& o : quad_catalog().orders)
          for (const auto& w : integral_witnesses(o)) {
            // beta/gamma integral: trace and norm of the fraction are integers.
            const Integer g = w.gamma.x;
            const bool integral = trace(o, w.beta) % g == 0 && norm(o, w.beta) % (g * g) == 0;
            const bool outside = !(w.beta.x % g == 0 && w.beta.y % g == 0);
            bool both = true;
            for (const auto& m : enumerate_quad_maps(o, w.ell)) both = both && b_doubleprime_check(o, m, w.beta, w.gamma).singular();
            ok = ok && integral && outside && both;
            cases.push_back({{"order", o.name()}, {"ell", w.ell}, {"beta", to_json(w.beta)}, {"gamma", to_json(w.gamma)},
                             {"singular", both}});
          }
        return verdict(ok, {{"cases", cases}});
      });

  add("criterion-01", "census", "number of Jacobi maps is (lambda-1)/ord(p), or 1 at p = lambda", 1, census);
  add("criterion-02", "fc", "fundamental congruence, exhaustive for p in {5,7,11,13}", 2, fc_exhaustive);
  add("criterion-03", "reflection", "J sigma_{-1}(J) = p for all p <= 50 and nondegenerate indices", 3, reflection_all);
  add("criterion-04", "stickelberger", "v(J(chi,chi)) = 1 exactly at sigma_t^{-1} P with 0 < 2t < lambda", 4,
      stickelberger_all);
  add("criterion-05", "quartic", "quartic corollary and the binomial congruence", 5, quartic_all);
  add("criterion-06", "valuation", "Kummer multiplicity equals the lattice oracle; additive, ultrametric, interval", 6,
      kummer_vs_oracle);
  add("criterion-07", "valuation", "sum of f mu over the maps of p equals v_p(N(x))", 7, norm_consistency);
  add("criterion-08", "valuation", "exact division agrees with valuations; all-defined quotients are integral", 8,
      completeness);
  add("criterion-09", "monoid", "Hilbert monoid suite and the singular monoid N", 9, monoid_suite);
  add("criterion-10", "quad", "singular-order suite with maximal-order controls", 10, singular_orders);
  add("criterion-11", "charsum", "(a,x)^lambda descends to Z[a] and is substitution invariant", 11, descent_all);
  return v;
}

}  // namespace

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = build();
  return claims;
}

bool claim_matches(const Claim& c, const std::string& filter) {
  if (filter.empty()) return true;
  std::stringstream ss(filter);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty() && (tok == c.group || c.id.rfind(tok, 0) == 0)) return true;
  return false;
}

ClaimOutcome run_claim(const Claim& c, const ClaimOptions& opts) {
  ClaimOutcome o;
  o.claim = &c;
  try {
    ClaimResult r = c.run(opts);
    o.pass = r.pass;
    o.detail = std::move(r.detail);
  } catch (const std::exception& e) {
    o.pass = false;
    o.error = e.what();
  }
  return o;
}

Json to_json(const ClaimOutcome& o) {
  Json j{{"schema", kSchema},
         {"claim", o.claim->id},
         {"group", o.claim->group},
         {"statement", o.claim->statement},
         {"criterion", o.claim->criterion},
         {"pass", o.pass},
         {"detail", o.detail}};
  if (!o.error.empty()) j["error"] = o.error;
  return j;
}

}  // namespace kummer
