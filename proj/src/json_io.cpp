#include "bclab/json_io.hpp"

#include "bclab/errors.hpp"

namespace bclab {

Json to_json(const Dyadic& d) { return d.format(); }

Dyadic dyadic_from_json(const Json& j) {
  if (j.is_string()) return Dyadic::parse(j.get<std::string>());
  if (j.is_number_integer()) return Dyadic(j.get<long>());
  throw ParseError("expected a dyadic string like \"3/2^3\", got " + j.dump());
}

Json to_json(const PLMap& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces())
    pieces.push_back({{"left", p.left.format()}, {"slopeExp", p.slope_exp}, {"offset", p.offset.format()}});
  return {{"domain", f.domain() == Domain::Interval ? "interval" : "circle"}, {"pieces", pieces}};
}

PLMap pl_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces")) throw ParseError("PL map JSON needs a \"pieces\" array");
  Domain domain = Domain::Interval;
  if (j.contains("domain")) {
    const std::string d = j.at("domain").get<std::string>();
    if (d == "circle")
      domain = Domain::Circle;
    else if (d != "interval")
      throw ParseError("unknown domain \"" + d + "\"");
  }
  std::vector<Piece> pieces;
  for (const auto& p : j.at("pieces")) {
    if (!p.contains("left") || !p.contains("slopeExp") || !p.contains("offset"))
      throw ParseError("piece needs left, slopeExp and offset: " + p.dump());
    pieces.push_back(Piece{dyadic_from_json(p.at("left")), p.at("slopeExp").get<long>(), dyadic_from_json(p.at("offset"))});
  }
  return PLMap::from_pieces(domain, std::move(pieces));
}

Json to_json(const OmegaPLMap& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces())
    pieces.push_back({{"left", p.left.format()}, {"slopeExp", p.slope_exp}, {"offset", p.offset.format()}});
  return {{"pieces", pieces},
          {"knownEnd", f.known_end().format()},
          {"accumulation", f.accumulation().format()},
          {"depth", f.depth()}};
}

std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str();
}

Json to_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [t, v] : c.terms()) out.push_back({{"tuple", t}, {"coeff", rational_string(v)}});
  return out;
}

std::vector<PLMap> generators_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("generators")) throw ParseError("generator file needs a \"generators\" array");
    list = &j.at("generators");
  }
  if (!list->is_array()) throw ParseError("generators must be a JSON array");
  std::vector<PLMap> out;
  for (const auto& g : *list) out.push_back(pl_map_from_json(g));
  return out;
}

bool RunReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunReport::add(std::string name, std::string paper_ref, Json expected, Json actual, bool ok) {
  checks.push_back(CheckRecord{std::move(name), std::move(paper_ref), std::move(expected), std::move(actual), ok});
}

Json to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"paperRef", c.paper_ref}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"schema", kSchema},  {"command", r.command}, {"seed", r.seed},         {"checks", checks},
          {"result", r.result}, {"pass", r.pass()},     {"wallTime", r.wall_time}};
}

RunReport report_from_json(const Json& j) {
  if (j.value("schema", "") != kSchema) throw ParseError("report schema must be \"bclab/1\"");
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks"))
    r.add(c.at("name").get<std::string>(), c.at("paperRef").get<std::string>(), c.at("expected"), c.at("actual"),
          c.at("pass").get<bool>());
  r.result = j.at("result");
  r.wall_time = j.at("wallTime").get<double>();
  return r;
}

}  // namespace bclab
