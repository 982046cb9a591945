#include "eulercf_tools/scheme_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eulercf::tools {

namespace {

using nlohmann::json;

BigRational rational_field(const json& node, const char* coefficient, const char* field) {
  const std::string where = std::string(coefficient) + "." + field;
  if (!node.contains(field)) throw std::invalid_argument("scheme: missing " + where);
  const json& value = node.at(field);
  if (value.is_number_integer()) return BigRational(value.get<long long>());
  if (value.is_string()) {
    try {
      return BigRational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("scheme: " + where + ": " + e.what());
    }
  }
  throw std::invalid_argument("scheme: " + where + " must be a rational string or an integer");
}

AffineCoefficient coefficient(const json& doc, const char* name) {
  if (!doc.contains(name)) throw std::invalid_argument(std::string("scheme: missing coefficient ") + name);
  const json& node = doc.at(name);
  if (!node.is_object()) throw std::invalid_argument(std::string("scheme: ") + name + " must be an object {p, q}");
  return {rational_field(node, name, "p"), rational_field(node, name, "q")};
}

}  // namespace

RecurrenceScheme parse_scheme(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scheme: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("scheme: top level must be an object");

  std::string note;
  if (doc.contains("seed_note")) {
    if (!doc.at("seed_note").is_string()) throw std::invalid_argument("scheme: seed_note must be a string");
    note = doc.at("seed_note").get<std::string>();
  }
  return RecurrenceScheme(coefficient(doc, "f"), coefficient(doc, "g"), coefficient(doc, "h"), std::move(note));
}

RecurrenceScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read scheme file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scheme(buffer.str());
}

}  // namespace eulercf::tools
