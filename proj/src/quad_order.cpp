#include "kummerlab/quad_order.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "kummerlab/errors.hpp"
#include "quad_catalog.inc"

namespace kummer {

QuadOrder::QuadOrder(Integer u, Integer v, std::string name)
    : u_(std::move(u)), v_(std::move(v)), name_(std::move(name)), table_(2) {
  const Integer d = discriminant();
  if (d >= 0) {
    const Integer r = sqrt(d);
    if (r * r == d) throw std::invalid_argument("quad order: discriminant " + d.get_str() + " is a square");
  }
  table_(0, 0, 0) = 1;
  table_(0, 1, 1) = 1;
  table_(1, 0, 1) = 1;
  table_(1, 1, 0) = -v_;
  table_(1, 1, 1) = -u_;
  if (name_.empty()) name_ = "Z[t], t^2 + " + u_.get_str() + "t + " + v_.get_str();
}

QuadElt multiply(const QuadOrder& O, const QuadElt& a, const QuadElt& b) {
  const Integer yy = a.y * b.y;
  return {a.x * b.x - O.v() * yy, a.x * b.y + a.y * b.x - O.u() * yy};
}

Integer norm(const QuadOrder& O, const QuadElt& a) {
  // (x + y t)(x + y t') with t + t' = -u, t t' = v
  return a.x * a.x - O.u() * a.x * a.y + O.v() * a.y * a.y;
}

Integer trace(const QuadOrder& O, const QuadElt& a) { return 2 * a.x - O.u() * a.y; }

std::string to_string(const QuadElt& a, char var) {
  std::ostringstream os;
  if (a.y == 0) return a.x.get_str();
  if (a.x != 0) os << a.x.get_str() << (a.y < 0 ? " - " : " + ");
  else if (a.y < 0) os << "-";
  const Integer ay = abs(a.y);
  if (ay != 1) os << ay.get_str();
  os << var;
  return os.str();
}

std::string QuadJacobiMap::label() const {
  if (f == 1) return "t->" + std::to_string(theta.prime_field_value());
  return "t->X mod " + field->defining_polynomial().to_string('X');
}

std::vector<QuadJacobiMap> enumerate_quad_maps(const QuadOrder& O, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("quad maps: p must be prime");
  const PolyModP g(p, {mod_u64(O.v(), p), mod_u64(O.u(), p), 1});
  std::vector<QuadJacobiMap> out;
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& mf : factor_mod_p(g)) {
    QuadJacobiMap m;
    m.p = p;
    m.f = mf.factor.degree();
    if (m.f == 1) {
      const u64 r = (p - mf.factor[0]) % p;
      m.field = FiniteField::prime_field(p);
      m.theta = FFElement::constant(m.field, r);
      m.kernel = hnf({{P, Integer(0)}, {-Integer(static_cast<unsigned long>(r)), Integer(1)}}, 2);
    } else {
      m.field = FiniteField::create(mf.factor);
      m.theta = FFElement::generator(m.field);
      m.kernel = hnf({{P, Integer(0)}, {Integer(0), P}}, 2);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const QuadJacobiMap& a, const QuadJacobiMap& b) {
    if (a.f != b.f) return a.f < b.f;
    return a.theta < b.theta;
  });
  return out;
}

FFElement apply(const QuadJacobiMap& map, const QuadElt& x) {
  return FFElement::constant(map.field, mod_u64(x.x, map.p)) +
         FFElement::constant(map.field, mod_u64(x.y, map.p)) * map.theta;
}

B2Check b_doubleprime_check(const QuadOrder& O, const QuadJacobiMap& map, const QuadElt& beta,
                            const QuadElt& gamma) {
  if (beta.is_zero() || gamma.is_zero()) throw std::invalid_argument("check-b2: zero numerator or denominator");
  const MultTable& t = O.mult_table();
  B2Check r;
  r.at_x = !map.kernel.contains(colon(principal_ideal(gamma.coords(), t), beta.coords(), t));
  r.at_inv = !map.kernel.contains(colon(principal_ideal(beta.coords(), t), gamma.coords(), t));
  return r;
}

IntLattice ideal(const QuadOrder& O, const std::vector<QuadElt>& gens) {
  std::vector<IntVec> rows;
  for (const auto& g : gens) {
    rows.push_back(g.coords());
    rows.push_back(multiply(O, g, {0, 1}).coords());
  }
  return hnf(rows, 2);
}

PrimeSquareReport prime_square_anomaly() {
  const QuadOrder O(0, 3, "Z[sqrt(-3)]");
  PrimeSquareReport r;
  r.p = ideal(O, {{2, 0}, {1, 1}});
  r.p_squared = product(r.p, r.p, O.mult_table());
  r.two = ideal(O, {{2, 0}});
  r.two_p = product(r.two, r.p, O.mult_table());
  r.square_equals_two_p = r.p_squared == r.two_p;
  r.p_differs_from_two = !(r.p == r.two);
  const QuadOrder maximal(1, 1, "Z[(1+sqrt(-3))/2]");
  const auto maps = enumerate_quad_maps(maximal, 2);
  r.maximal_two_is_prime = maps.size() == 1 && maps[0].f == 2 && maps[0].kernel == ideal(maximal, {{2, 0}});
  r.holds = r.square_equals_two_p && r.p_differs_from_two && r.maximal_two_is_prime;
  return r;
}

namespace {

/// Fundamental discriminant of Q(sqrt(d)).
Integer field_discriminant(const Integer& d) {
  Integer core = d < 0 ? Integer(-1) : Integer(1);
  for (const auto& [p, e] : factor_integer(abs(d)))
    if (e % 2) core *= p;
  const Integer r = ((core % 4) + 4) % 4;
  return r == 1 ? core : 4 * core;
}

}  // namespace

Integer conductor(const QuadOrder& O) {
  const Integer d = O.discriminant();
  const Integer dk = field_discriminant(d);
  const Integer f2 = d / dk;
  const Integer f = sqrt(f2);
  if (f * f != f2 || f2 * dk != d) throw MathError("conductor: discriminant quotient is not a square");
  return f;
}

bool is_integrally_closed(const QuadOrder& O) { return conductor(O) == 1; }

std::vector<IntegralWitness> integral_witnesses(const QuadOrder& O) {
  const Integer f = conductor(O);
  const Integer dk = field_discriminant(O.discriminant());
  std::vector<IntegralWitness> out;
  if (f == 1) return out;
  for (const auto& [ell, e] : factor_integer(f)) {
    // (f dk + sqrt(D)) / (2 ell) = (f / ell) (dk + sqrt(dk)) / 2, sqrt(D) = u + 2t.
    IntegralWitness w;
    w.ell = ell.get_ui();
    w.beta = {f * dk + O.u(), 2};
    w.gamma = {2 * ell, 0};
    out.push_back(w);
  }
  return out;
}

namespace {

Rational frac(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_sqrt(Rational q) {
  q.canonicalize();
  if (q < 0) return std::nullopt;
  const Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
  if (n * n != q.get_num() || d * d != q.get_den()) return std::nullopt;
  return frac(n, d);
}

/// a + b sqrt(D) with (a + b sqrt(D))^2 = A + B sqrt(D).
std::optional<std::pair<Rational, Rational>> sqrt_in_field(const Rational& A, const Rational& B, const Integer& D) {
  if (B == 0) {
    if (auto a = rational_sqrt(A)) return std::make_pair(*a, Rational(0));
    if (auto b = rational_sqrt(A / Rational(D))) return std::make_pair(Rational(0), *b);
    return std::nullopt;
  }
  const auto s = rational_sqrt(A * A - Rational(D) * B * B);
  if (!s) return std::nullopt;
  for (const Rational& a2 : {Rational((A + *s) / 2), Rational((A - *s) / 2)}) {
    auto a = rational_sqrt(a2);
    if (!a || *a == 0) continue;
    Rational b = B / (2 * *a);
    if (*a * *a + Rational(D) * b * b == A) return std::make_pair(*a, b);
  }
  return std::nullopt;
}

bool in_order(const QuadOrder& O, const Rational& a, const Rational& b) {
  // a + b sqrt(D) = (a + b u) + 2b t
  const Rational y = 2 * b, x = a + b * Rational(O.u());
  return x.get_den() == 1 && y.get_den() == 1;
}

std::string render(const Rational& a, const Rational& b, const Integer& D) {
  std::ostringstream os;
  os << "(" << a.get_str() << (b < 0 ? " - " : " + ") << Rational(abs(b)).get_str() << " sqrt(" << D.get_str() << "))";
  return os.str();
}

}  // namespace

GaussLemma gauss_lemma_check(const QuadOrder& O, const QuadElt& c1, const QuadElt& c0) {
  // Work in K = Q(sqrt(D)): x + y t = (x - y u / 2) + (y / 2) sqrt(D).
  const Integer D = O.discriminant();
  auto to_k = [&](const QuadElt& e) {
    return std::make_pair(Rational(Rational(e.x) - frac(e.y * O.u(), 2)), frac(e.y, 2));
  };
  const auto [p, q] = to_k(c1);
  const auto [r, s] = to_k(c0);
  // disc = c1^2 - 4 c0
  const Rational A = p * p + Rational(D) * q * q - 4 * r, B = 2 * p * q - 4 * s;
  GaussLemma g;
  const auto root = sqrt_in_field(A, B, D);
  if (!root) return g;
  g.reducible_over_K = true;
  const Rational a1 = (-p + root->first) / 2, b1 = (-q + root->second) / 2;
  const Rational a2 = (-p - root->first) / 2, b2 = (-q - root->second) / 2;
  g.reducible_over_O = in_order(O, a1, b1) && in_order(O, a2, b2);
  g.roots = render(a1, b1, D) + ", " + render(a2, b2, D);
  return g;
}

const QuadCatalog& quad_catalog() {
  static const QuadCatalog catalog = [] {
    const auto j = nlohmann::json::parse(kQuadCatalogJson);
    QuadCatalog c;
    for (const auto& o : j.at("orders"))
      c.orders.emplace_back(Integer(o.at("u").get<long>()), Integer(o.at("v").get<long>()),
                            o.at("name").get<std::string>());
    for (const auto& p : j.at("polynomials")) {
      const auto& a = p.at("c1");
      const auto& b = p.at("c0");
      c.polynomials.push_back({{a[0].get<long>(), a[1].get<long>()}, {b[0].get<long>(), b[1].get<long>()}});
    }
    return c;
  }();
  return catalog;
}

}  // namespace kummer
