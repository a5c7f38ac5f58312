#include <doctest.h>

#include "kummerlab/claims.hpp"
#include "kummerlab/expr.hpp"

using namespace kummer;

namespace {
bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}
}  // namespace

TEST_CASE("envelopes carry the schema and sort keys") {
  const Json e = envelope("factor", true, to_json(factorize(parse_cyclotomic("2 + a", CycRing::of(5)))));
  CHECK(e["schema"] == "kummerlab/1");
  CHECK(e["ok"] == true);
  const std::string s = render_json(e);
  CHECK(s.find("\"command\"") < s.find("\"ok\""));
  CHECK(s.find("\"ok\"") < s.find("\"result\""));
  CHECK(s.back() == '\n');
  CHECK_FALSE(has_float(e));
  const auto& rec = e["result"]["records"];
  REQUIRE(rec.size() == 4);
  for (const auto& r : rec) {
    CHECK(r.contains("xi"));
    CHECK(r.contains("u"));
    CHECK(r.contains("psi"));
    CHECK(r.contains("mu"));
  }
}

TEST_CASE("big integers are rendered as strings") {
  const Json j = to_json(Integer("123456789012345678901234567890"));
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("claim filtering") {
  std::size_t monoid = 0, total = 0;
  for (const auto& c : all_claims()) {
    ++total;
    if (claim_matches(c, "monoid")) {
      ++monoid;
      CHECK(c.group == "monoid");
    }
    CHECK(claim_matches(c, ""));
  }
  CHECK(monoid >= 3);
  CHECK(monoid < total);
  std::size_t prefix = 0;
  for (const auto& c : all_claims()) prefix += claim_matches(c, "criterion-0") ? 1 : 0;
  CHECK(prefix == 9);
}

TEST_CASE("claim outcomes are deterministic") {
  const ClaimOptions opts;
  for (const auto& c : all_claims()) {
    if (c.criterion != 0) continue;
    const Json a = to_json(run_claim(c, opts)), b = to_json(run_claim(c, opts));
    CHECK(a.dump() == b.dump());
    CHECK(a["pass"] == true);
    CHECK_FALSE(has_float(a));
  }
}
