#include "infratop/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace infratop {

namespace {

using Json = nlohmann::ordered_json;

Json names(const GroundSet& g, SubsetMask a) { return Json(g.names_of(a)); }

Json family_json(const GroundSet& g, const SetFamily& f) {
  Json out = Json::array();
  for (auto s : f) out.push_back(names(g, s));
  return out;
}

bool is_letter_ground(const GroundSet& g) { return g.size() <= 26 && g == GroundSet::letters(g.size()); }

GroundSet ground_from(const Json& doc) {
  if (doc.contains("ground")) {
    const auto& arr = doc.at("ground");
    if (!arr.is_array()) throw ParseError("\"ground\" must be an array of names");
    std::vector<std::string> elems;
    for (const auto& e : arr) {
      if (!e.is_string()) throw ParseError("ground element names must be strings");
      elems.push_back(e.get<std::string>());
    }
    try {
      return GroundSet(std::move(elems));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (doc.contains("n")) {
    const auto& n = doc.at("n");
    if (!n.is_number_unsigned() || n.get<unsigned>() < 1 || n.get<unsigned>() > 26) {
      throw ParseError("\"n\" must be an integer between 1 and 26");
    }
    return GroundSet::letters(n.get<unsigned>());
  }
  throw ParseError("space needs a \"ground\" or \"n\" key");
}

}  // namespace

SpaceFile parse_space_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("space must be a JSON object");
  GroundSet g = ground_from(doc);
  if (!doc.contains("opens") || !doc.at("opens").is_array()) throw ParseError("space needs an \"opens\" array");
  std::vector<SubsetMask> members;
  for (const auto& set : doc.at("opens")) {
    if (!set.is_array()) throw ParseError("each open set must be an array of names");
    std::vector<std::string> elems;
    for (const auto& e : set) {
      if (!e.is_string()) throw ParseError("set members must be strings");
      elems.push_back(e.get<std::string>());
    }
    try {
      members.push_back(g.subset(elems));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return SpaceFile{std::move(g), SetFamily(std::move(members))};
}

SpaceFile read_space_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space_json(buf.str());
}

std::string space_to_json(const GroundSet& g, const SetFamily& opens) {
  // one line per key; nlohmann's indent would put every name on its own line
  return "{\n  \"ground\": " + Json(g.elements()).dump() + ",\n  \"opens\": " + family_json(g, opens).dump() +
         "\n}\n";
}

std::string space_to_jsonl(const InfraSpace& s) {
  Json doc;
  if (is_letter_ground(s.ground())) {
    doc["n"] = s.size();
  } else {
    doc["ground"] = s.ground().elements();
  }
  doc["opens"] = family_json(s.ground(), s.opens());
  return doc.dump();
}

std::string verdict_to_jsonl(const TheoremVerdict& v) {
  const auto& g = v.space.ground();
  Json doc;
  doc["theorem"] = v.theorem_id;
  doc["space_opens"] = family_json(g, v.space.opens());
  doc["status"] = v.passed ? "pass" : "fail";
  Json w = Json::array();
  for (const auto& tuple : v.witnesses) {
    Json t = Json::array();
    for (auto a : tuple) t.push_back(names(g, a));
    w.push_back(std::move(t));
  }
  doc["witnesses"] = std::move(w);
  doc["checked"] = v.checked_count;
  return doc.dump();
}

std::string matrix_to_json(const ImplicationMatrix& m) {
  Json doc;
  doc["spaces"] = m.space_count;
  Json classes = Json::array();
  for (const auto& c : m.classes) classes.push_back(c.name());
  doc["classes"] = std::move(classes);
  Json cells = Json::array();
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    for (std::size_t j = 0; j < m.classes.size(); ++j) {
      const auto& c = m.cells[i][j];
      Json cell;
      cell["from"] = m.classes[i].name();
      cell["to"] = m.classes[j].name();
      cell["holds"] = c.holds;
      cell["counterexamples"] = c.counterexamples;
      if (c.witness) {
        const auto& g = c.witness->space.ground();
        cell["witness"] = {{"ground", g.elements()},
                           {"opens", family_json(g, c.witness->space.opens())},
                           {"subset", names(g, c.witness->subset)}};
      } else {
        cell["witness"] = nullptr;
      }
      cells.push_back(std::move(cell));
    }
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

}  // namespace infratop
