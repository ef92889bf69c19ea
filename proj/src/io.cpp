#include "vdouble/io.hpp"

#include <fstream>
#include <sstream>

#include "vdouble/error.hpp"

namespace vdouble {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string", 0);
  return j.get<std::string>();
}

Rational scalar(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw ParseError("matrix entries must be strings or integers", 0);
}

}  // namespace

json to_json(const Presentation& p) {
  json j;
  j["format"] = kFormatVersion;
  j["algebra"] = to_string(p.algebra());
  j["generators"] = p.generators;
  json rels = json::array();
  if (p.algebra() == Algebra::Quandle) {
    for (const auto& r : p.quandle_relations()) rels.push_back({{"lhs", print_term(r.lhs)}, {"rhs", print_term(r.rhs)}});
  } else {
    for (const auto& r : p.group_relations()) rels.push_back({{"lhs", print_word(r.lhs)}, {"rhs", print_word(r.rhs)}});
  }
  j["relations"] = std::move(rels);
  json mer = json::object();
  for (const auto& [c, g] : p.meridians) mer[std::to_string(c)] = g;
  j["meridians"] = std::move(mer);
  j["provenance"] = p.provenance;
  return j;
}

Presentation presentation_from_json(const json& j) {
  if (j.contains("format") && j.at("format") != kFormatVersion) throw ParseError("unsupported presentation format", 0);
  Presentation p;
  const Algebra algebra = parse_algebra(text(field(j, "algebra"), "algebra"));
  for (const auto& g : field(j, "generators")) p.generators.push_back(text(g, "generator"));
  const json& rels = field(j, "relations");
  if (!rels.is_array()) throw ParseError("relations must be an array", 0);
  if (algebra == Algebra::Quandle) {
    std::vector<TermRelation> out;
    for (const auto& r : rels) out.push_back(TermRelation{parse_term(text(field(r, "lhs"), "lhs")), parse_term(text(field(r, "rhs"), "rhs"))});
    p.relations = std::move(out);
  } else {
    std::vector<WordRelation> out;
    for (const auto& r : rels) out.push_back(WordRelation{parse_word(text(field(r, "lhs"), "lhs")), parse_word(text(field(r, "rhs"), "rhs"))});
    p.relations = std::move(out);
  }
  if (j.contains("meridians")) {
    for (const auto& [k, v] : j.at("meridians").items()) {
      std::size_t c = 0;
      try {
        c = std::stoul(k);
      } catch (const std::exception&) {
        throw ParseError("meridian keys must be component indices", 0);
      }
      p.meridians[c] = text(v, "meridian");
    }
  }
  if (j.contains("provenance")) p.provenance = text(j.at("provenance"), "provenance");
  p.validate();
  return p;
}

json to_json(const CountReport& r) {
  json j;
  j["format"] = kFormatVersion;
  j["presentation"] = r.presentation;
  json counts = json::object();
  json skipped = json::object();
  json elapsed = json::object();
  for (const auto& e : r.entries) {
    if (e.count) {
      counts[e.target] = e.count->get_str();
    } else {
      skipped[e.target] = e.note;
    }
    elapsed[e.target] = e.elapsed.count();
  }
  j["counts"] = std::move(counts);
  j["skipped"] = std::move(skipped);
  j["elapsed_us"] = std::move(elapsed);
  return j;
}

json to_json(const Mat2& m) {
  return json::array({json::array({to_string(m.e[0]), to_string(m.e[1])}), json::array({to_string(m.e[2]), to_string(m.e[3])})});
}

json to_json(const WitnessReport& r) {
  json j;
  j["format"] = kFormatVersion;
  j["holds"] = r.holds;
  json rels = json::array();
  for (const auto& c : r.relations) {
    rels.push_back({{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"delta", to_json(c.delta)}, {"holds", c.holds}});
  }
  j["relations"] = std::move(rels);
  return j;
}

MatrixAssignment matrix_assignment_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix assignment must be an object", 0);
  MatrixAssignment out;
  for (const auto& [name, m] : j.items()) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2) {
      throw ParseError("matrix for '" + name + "' must be 2x2", 0);
    }
    out[name] = Mat2{{scalar(m[0][0]), scalar(m[0][1]), scalar(m[1][0]), scalar(m[1][1])}};
  }
  return out;
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace vdouble
