#include "kummerlab/report.hpp"

#include <sstream>

namespace kummer {

Json envelope(const std::string& command, bool ok, Json result) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["ok"] = ok;
  j["result"] = std::move(result);
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void text(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        text(os, v, indent + 1);
      } else {
        os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j)
      if (v.is_structured()) flat = false;
    if (flat) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar(j[i]);
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "- [" << i << "]\n";
      text(os, j[i], indent + 1);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

Json ints(const std::vector<int>& v) { return Json(v); }

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  text(os, j, 0);
  return os.str();
}

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const CycElt& x) {
  Json c = Json::array();
  for (const auto& v : x.coeffs()) c.push_back(v.get_str());
  return {{"coeffs", c}, {"text", x.to_string('a')}};
}

Json to_json(const JacobiMap& m) {
  return {{"lambda", m.lambda}, {"p", m.p}, {"f", m.f}, {"label", m.label()},
          {"factor", m.factor.to_string('X')}, {"xi", m.xi.to_string()}, {"ramified", m.ramified()}};
}

Json to_json(const KummerPrime& k) {
  Json coeffs = Json::array();
  for (const auto& c : k.psi_coeffs) coeffs.push_back(c.get_str());
  return {{"map", to_json(k.map)},
          {"periods", {{"e", k.periods.e}, {"f", k.periods.f}, {"g", k.periods.g}}},
          {"residues", k.residues},
          {"psi", {{"constant", k.psi_constant.get_str()}, {"period_coeffs", coeffs}, {"element", to_json(k.psi)}}},
          {"Psi", to_json(k.conjugate_product)},
          {"period_norm", k.period_norm.get_str()}};
}

Json to_json(const IdealFactorization& f) {
  Json recs = Json::array();
  for (const auto& r : f.records)
    recs.push_back({{"p", r.prime->map.p}, {"f", r.prime->map.f}, {"xi", r.prime->map.label()},
                    {"u", r.prime->residues}, {"psi", r.prime->psi.to_string('a')}, {"mu", r.mu}});
  return {{"element", to_json(f.element)}, {"norm", f.norm.get_str()}, {"records", recs}, {"remark", f.unit_remark}};
}

Json to_json(const ReflectionReport& r) {
  return {{"J", to_json(r.j)}, {"psi", to_json(-r.j)}, {"J_times_conjugate", to_json(r.product)}, {"holds", r.holds}};
}

Json to_json(const GaussJacobiReport& r) {
  return {{"J", to_json(r.j)}, {"psi", to_json(r.psi)}, {"product_matches", r.product_matches}};
}

Json to_json(const DescentReport& r) {
  return {{"value", to_json(r.value)}, {"substitution_invariant", r.substitution_invariant},
          {"jacobi_expression", to_json(r.jacobi_expression)}, {"matches_jacobi", r.matches_jacobi}};
}

Json to_json(const FcReport& r) {
  return {{"p", r.p}, {"i", r.i}, {"k", r.k}, {"g", r.g}, {"psi_residue", r.psi_residue}, {"J_residue", r.j_residue},
          {"expected", r.expected}, {"binomial_quotient", r.binomial_quotient.get_str()}, {"holds", r.holds},
          {"holds_for_psi", r.holds_for_psi}};
}

Json to_json(const QuarticReport& r) {
  return {{"p", r.p}, {"a", r.a.get_str()}, {"b", r.b.get_str()}, {"odd_part", r.odd_part.get_str()},
          {"half_binomial", r.half_binomial}, {"norm_ok", r.norm_ok}, {"congruence_ok", r.congruence_ok}};
}

Json to_json(const BinomialReport& r) {
  return {{"p", r.p}, {"a", r.a.get_str()}, {"b", r.b.get_str()}, {"binomial_residue", r.binomial_residue},
          {"holds", r.holds}};
}

Json to_json(const StickelbergerReport& r) {
  Json es = Json::array();
  for (const auto& e : r.entries)
    es.push_back({{"t", e.t}, {"map", e.map_label}, {"kummer", e.kummer}, {"oracle", e.oracle},
                  {"fc_divisible", e.fc_divisible}, {"expected", e.expected}});
  return {{"lambda", r.lambda}, {"p", r.p}, {"xi", r.xi}, {"J", to_json(r.j)}, {"psi", to_json(-r.j)},
          {"entries", es}, {"total", r.total}, {"holds", r.holds}};
}

Json to_json(const DescentValuationReport& r) {
  return {{"gauss_power", ints(r.gauss_power)}, {"gauss_power_sq", ints(r.gauss_power_sq)},
          {"jacobi", ints(r.jacobi)}, {"consistent", r.consistent}};
}

Json to_json(const DefinedAt& d) {
  Json j{{"defined", d.defined}, {"infinite", d.infinite}};
  if (d.defined) {
    j["value"] = d.value;
    j["witness"] = d.witness_num.get_str() + "/" + d.witness_den.get_str();
  }
  return j;
}

Json to_json(const ClassGroup& g) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < g.cosets.size(); ++i)
    classes.push_back({{"representative", g.cosets[i]}, {"least_prime", g.least_primes[i]}});
  return {{"order", g.order}, {"structure", g.structure()}, {"invariant_factors", g.invariant_factors},
          {"classes", classes}, {"table", g.table}, {"law_well_defined", g.law_well_defined}};
}

Json to_json(const SingularReport& r) {
  Json j{{"six_over_two", to_json(r.six_over_two)}, {"two_over_six", to_json(r.two_over_six)},
         {"nine_square_in_N", r.nine_square_in_N}, {"holds", r.holds}};
  if (r.nine_root_in_QN)
    j["nine_root_in_QN"] = std::to_string(r.nine_root_in_QN->first) + "/" + std::to_string(r.nine_root_in_QN->second);
  return j;
}

Json to_json(const QuadElt& x) { return {{"x", x.x.get_str()}, {"y", x.y.get_str()}, {"text", to_string(x)}}; }

Json to_json(const QuadJacobiMap& m) {
  return {{"p", m.p}, {"f", m.f}, {"label", m.label()}, {"kernel_index", m.kernel.index().get_str()}};
}

Json to_json(const B2Check& c) { return {{"at_x", c.at_x}, {"at_inverse", c.at_inv}, {"singular", c.singular()}}; }

Json to_json(const PrimeSquareReport& r) {
  return {{"p_index", r.p.index().get_str()},
          {"p_squared_index", r.p_squared.index().get_str()},
          {"two_p_index", r.two_p.index().get_str()},
          {"two_index", r.two.index().get_str()},
          {"square_equals_two_p", r.square_equals_two_p},
          {"p_differs_from_two", r.p_differs_from_two},
          {"maximal_two_is_prime", r.maximal_two_is_prime},
          {"holds", r.holds}};
}

Json to_json(const GaussLemma& g) {
  return {{"reducible_over_K", g.reducible_over_K}, {"reducible_over_O", g.reducible_over_O}, {"roots", g.roots}};
}

}  // namespace kummer
