#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kummerlab/report.hpp"

namespace kummer {

struct ClaimOptions {
  FactorOptions factor;
  u64 enum_cap = 10000;
};

struct ClaimResult {
  bool pass = false;
  Json detail;
};

/// One checkable statement: a worked example or an acceptance criterion.
struct Claim {
  std::string id;
  std::string group;
  std::string statement;
  int criterion = 0;  // acceptance criterion number, 0 for worked examples
  std::function<ClaimResult(const ClaimOptions&)> run;
};

const std::vector<Claim>& all_claims();

/// Comma-separated tokens; a claim matches a token equal to its group, equal
/// to its id, or a prefix of its id. An empty filter matches everything.
bool claim_matches(const Claim& c, const std::string& filter);

struct ClaimOutcome {
  const Claim* claim = nullptr;
  bool pass = false;
  Json detail;
  std::string error;
};

/// Runs a claim, turning exceptions into failures with the message recorded.
ClaimOutcome run_claim(const Claim& c, const ClaimOptions& opts);
Json to_json(const ClaimOutcome& o);

}  // namespace kummer
