#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bclab/bar_complex.hpp"
#include "bclab/dyadic.hpp"
#include "bclab/omega_map.hpp"
#include "bclab/pl_map.hpp"

namespace bclab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bclab/1";

Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

/// {"domain":"interval"|"circle","pieces":[{"left":"p/2^e","slopeExp":k,"offset":"p/2^e"},..]}
Json to_json(const PLMap& f);
PLMap pl_map_from_json(const Json& j);

/// Pieces plus knownEnd, accumulation, depth.
Json to_json(const OmegaPLMap& f);

/// Chain as [{"tuple":[..],"coeff":"p/q"},..] in tuple order.
Json to_json(const Chain& c);

/// Accepts either an array of maps or {"generators":[...]}.
std::vector<PLMap> generators_from_json(const Json& j);

std::string rational_string(const mpq_class& q);

/// One verified statement inside a report.
struct CheckRecord {
  std::string name;
  std::string paper_ref;
  Json expected;
  Json actual;
  bool pass = false;
};

/// Machine-readable outcome of one CLI invocation.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  Json result = Json::object();
  double wall_time = 0;

  bool pass() const;
  void add(std::string name, std::string paper_ref, Json expected, Json actual, bool pass);
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

}  // namespace bclab
