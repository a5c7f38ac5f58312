#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "kummerlab/charsum.hpp"
#include "kummerlab/monoid.hpp"
#include "kummerlab/quad_order.hpp"
#include "kummerlab/valuation.hpp"

namespace kummer {

/// Object keys are kept sorted (std::map backing); numbers are integers, big
/// integers are strings.
using Json = nlohmann::json;

inline constexpr const char* kSchema = "kummerlab/1";

Json envelope(const std::string& command, bool ok, Json result);
/// Pretty JSON, two-space indent, trailing newline.
std::string render_json(const Json& j);
/// Indented "key: value" listing of the same tree.
std::string render_text(const Json& j);

Json to_json(const Integer& x);
Json to_json(const CycElt& x);
Json to_json(const JacobiMap& m);
Json to_json(const KummerPrime& k);
Json to_json(const IdealFactorization& f);
Json to_json(const ReflectionReport& r);
Json to_json(const GaussJacobiReport& r);
Json to_json(const DescentReport& r);
Json to_json(const FcReport& r);
Json to_json(const QuarticReport& r);
Json to_json(const BinomialReport& r);
Json to_json(const StickelbergerReport& r);
Json to_json(const DescentValuationReport& r);
Json to_json(const DefinedAt& d);
Json to_json(const ClassGroup& g);
Json to_json(const SingularReport& r);
Json to_json(const QuadElt& x);
Json to_json(const QuadJacobiMap& m);
Json to_json(const B2Check& c);
Json to_json(const PrimeSquareReport& r);
Json to_json(const GaussLemma& g);

}  // namespace kummer
