#pragma once

// JSON file formats.
//
//   operator:    {"dim": d, "re": [[...]], "im": [[...]]}   row-major; "im" optional
//   observable:  {"yes": operator, "no": operator}          "no" optional (I - yes);
//                a bare operator is read as the yes effect
//   state:       operator, or {"ket": {"re": [...], "im": [...]}}
//   settings:    {"a1": observable, "a2": ..., "b1": ..., "b2": ...}
//   box:         {"p": {"11": [[p++, p+-], [p-+, p--]], "12": ..., "21": ..., "22": ...}}
//                entries are numbers or "n/d" strings
//
// Every report carries "schema": "uj/1".

#include <string>
#include <variant>

#include <json.hpp>

#include "uj/bell.hpp"
#include "uj/decompose.hpp"
#include "uj/joint.hpp"

namespace uj::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "uj/1";

/// Reads and parses a JSON file. ParseError carries file:line:column.
json read_file(const std::string& path);
/// Parses text; `origin` names the source in error messages.
json parse(const std::string& text, const std::string& origin = "<input>");

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& field = "$");

json to_json(const DichotomicObservable& obs);
DichotomicObservable observable_from_json(const json& j, const std::string& field = "$");

DensityMatrix state_from_json(const json& j, const std::string& field = "$");
ChshSettings settings_from_json(const json& j, const std::string& field = "$");

using AnyBox = std::variant<ExactBox, RealBox>;
AnyBox box_from_json(const json& j, const std::string& field = "$");
json box_to_json(const ExactBox& box);

json to_json(const FeasibilityReport& r);
json to_json(const JointObservable& j);
json to_json(const BlockDecomposition& d);
json to_json(const Dilation& d);
json to_json(const ChshReport& r);
json to_json(const LambdaOptResult& r);
json box_chsh_to_json(const AnyBox& box);

/// Rational as "n/d" (or "n" for integers).
std::string to_string(const Rational& r);

}  // namespace uj::io
