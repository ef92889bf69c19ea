#ifndef VDOUBLE_IO_HPP
#define VDOUBLE_IO_HPP

#include <json.hpp>

#include <string>

#include "vdouble/homcount.hpp"
#include "vdouble/presenter.hpp"
#include "vdouble/targets.hpp"

namespace vdouble {

inline constexpr int kFormatVersion = 1;

// {"format":1, "algebra":..., "generators":[...], "relations":[{"lhs","rhs"}],
//  "meridians":{"0":...}, "provenance":...}; terms and words as text.
nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const Mat2& m);

// {"x": [["1","1"],["0","1"]], ...}; entries are decimal or fraction strings
// (plain JSON integers are accepted too).
MatrixAssignment matrix_assignment_from_json(const nlohmann::json& j);

// Throws ParseError with the byte offset on malformed JSON.
nlohmann::json parse_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace vdouble

#endif  // VDOUBLE_IO_HPP
