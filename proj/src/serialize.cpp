#include "lantern/serialize.hpp"

#include <limits>

namespace lantern {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Endpoint endpoint_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer()) {
    throw SchemaError("endpoint must be [label, position]");
  }
  auto label = boundary_from_string(j[0].get<std::string>());
  if (!label) throw SchemaError("unknown boundary label " + j[0].dump());
  return {*label, j[1].get<int>()};
}

Json endpoint_to_json(const Endpoint& p) { return Json::array({to_string(p.boundary), p.position}); }

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    return Integer(j.get<long long>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t digits = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos) {
      throw SchemaError("not an integer: " + j.dump());
    }
    return Integer(s);
  }
  throw SchemaError("not an integer: " + j.dump());
}

Json to_json(const ReducedForm& rf) {
  Json r = Json::array();
  for (const Integer& x : rf.r) r.push_back(to_json(x));
  Json blocks = Json::array();
  for (const Block& b : rf.blocks) blocks.push_back(Json::array({to_json(b.m), to_json(b.n)}));
  return Json{{"r", r}, {"blocks", blocks}};
}

ReducedForm reduced_form_from_json(const Json& j) {
  const Json& r = field(j, "r");
  const Json& blocks = field(j, "blocks");
  if (!r.is_array() || r.size() != 4) throw SchemaError("'r' must have four entries");
  if (!blocks.is_array()) throw SchemaError("'blocks' must be an array");
  ReducedForm rf;
  for (std::size_t k = 0; k < 4; ++k) rf.r[k] = integer_from_json(r[k]);
  for (const Json& b : blocks) {
    if (!b.is_array() || b.size() != 2) throw SchemaError("each block must be [m, n]");
    rf.blocks.push_back({integer_from_json(b[0]), integer_from_json(b[1])});
  }
  if (!rf.well_formed()) throw SchemaError("only m1 and the last n may be zero");
  return rf;
}

Json to_json(const Classification& c) {
  Json rules = Json::array();
  for (RuleTag t : c.rules) rules.push_back(to_string(t));
  return Json{{"verdict", to_string(c.verdict)},
              {"rules", rules},
              {"rotation", c.rotation},
              {"mirror", c.mirror}};
}

Classification classification_from_json(const Json& j) {
  Classification c;
  auto verdict = verdict_from_string(field(j, "verdict").get<std::string>());
  if (!verdict) throw SchemaError("unknown verdict");
  c.verdict = *verdict;
  for (const Json& t : field(j, "rules")) {
    auto rule = rule_from_string(t.get<std::string>());
    if (!rule) throw SchemaError("unknown rule " + t.dump());
    c.rules.push_back(*rule);
  }
  c.rotation = field(j, "rotation").get<std::size_t>();
  c.mirror = field(j, "mirror").get<bool>();
  return c;
}

Json to_json(const Arc& arc) {
  Json crossings = Json::array();
  for (const Crossing& x : arc.crossings) {
    crossings.push_back(Json::array({"d" + std::to_string(x.cut), x.sign > 0 ? "+" : "-"}));
  }
  return Json{{"start", endpoint_to_json(arc.start)},
              {"end", endpoint_to_json(arc.end)},
              {"crossings", crossings}};
}

Arc arc_from_json(const Json& j) {
  Arc arc;
  arc.start = endpoint_from_json(field(j, "start"));
  arc.end = endpoint_from_json(field(j, "end"));
  for (const Json& x : field(j, "crossings")) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string()) {
      throw SchemaError("crossing must be [\"d<i>\", \"+\"|\"-\"]");
    }
    const std::string cut = x[0].get<std::string>();
    const std::string sign = x[1].get<std::string>();
    if (cut.size() != 2 || cut[0] != 'd' || cut[1] < '1' || cut[1] > '3' ||
        (sign != "+" && sign != "-")) {
      throw SchemaError("bad crossing " + x.dump());
    }
    arc.crossings.push_back({cut[1] - '0', sign == "+" ? 1 : -1});
  }
  return arc;
}

Json to_json(const RVReport& report, const Word& word) {
  Json j{{"word", format(word)}};
  if (report.witness_found) {
    j["outcome"] = "NotRightVeering";
    j["bound"] = report.bound;
    j["boundary"] = to_string(report.boundary);
    j["witness"] = to_json(*report.witness);
    j["image"] = to_json(*report.image);
  } else {
    j["outcome"] = "NoWitnessUpToBound";
    j["bound"] = report.bound;
  }
  return j;
}

Json to_json(const Factorization& f) {
  return Json{{"word", format(f.word)},
              {"rule", to_string(f.rule)},
              {"rotation", f.rotation},
              {"conjugator", format(f.conjugator)}};
}

}  // namespace lantern
