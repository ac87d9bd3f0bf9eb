#include "json_schema.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

#include "jna/store/text.hpp"

#ifndef JNA_SCHEMA_DIR
#error "JNA_SCHEMA_DIR must be defined"
#endif

namespace jna::testkit {

using nlohmann::json;

namespace {

bool has_type(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  throw std::logic_error("unsupported schema type " + type);
}

}  // namespace

const json& SchemaValidator::resolve(const std::string& ref) const {
  const std::string prefix = "#/definitions/";
  if (ref.rfind(prefix, 0) != 0) throw std::logic_error("unsupported $ref " + ref);
  return root_.at("definitions").at(ref.substr(prefix.size()));
}

std::vector<std::string> SchemaValidator::validate(const json& doc,
                                                   const std::string& definition) const {
  std::vector<std::string> errors;
  check(doc, resolve("#/definitions/" + definition), "$", errors);
  return errors;
}

void SchemaValidator::check(const json& doc, const json& schema, const std::string& path,
                            std::vector<std::string>& errors) const {
  if (schema.contains("$ref")) {
    check(doc, resolve(schema["$ref"]), path, errors);
    return;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = has_type(doc, t);
    } else {
      for (const auto& alt : t) ok = ok || has_type(doc, alt);
    }
    if (!ok) {
      errors.push_back(path + ": wrong type " + std::string(doc.type_name()));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!doc.contains(r.get<std::string>()))
          errors.push_back(path + ": missing " + r.get<std::string>());
    const auto props = schema.value("properties", json::object());
    for (const auto& [key, value] : doc.items()) {
      if (props.contains(key))
        check(value, props[key], path + "." + key, errors);
      else if (schema.value("additionalProperties", true) == false)
        errors.push_back(path + ": unexpected property " + key);
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(path + ": too few items");
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>())
      errors.push_back(path + ": too many items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < doc.size(); ++i)
        check(doc[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
  }
  if (doc.is_string()) {
    const auto s = doc.get<std::string>();
    const auto len = store::code_point_count(s);
    if (schema.contains("minLength") && len < schema["minLength"].get<std::size_t>())
      errors.push_back(path + ": string too short");
    if (schema.contains("maxLength") && len > schema["maxLength"].get<std::size_t>())
      errors.push_back(path + ": string too long");
    if (schema.contains("pattern") &&
        !std::regex_search(s, std::regex(schema["pattern"].get<std::string>())))
      errors.push_back(path + ": '" + s + "' does not match pattern");
  }
  if (doc.is_number()) {
    if (schema.contains("minimum") && doc.get<double>() < schema["minimum"].get<double>())
      errors.push_back(path + ": below minimum");
    if (schema.contains("maximum") && doc.get<double>() > schema["maximum"].get<double>())
      errors.push_back(path + ": above maximum");
  }
}

SchemaValidator load_api_schema() {
  std::ifstream in(std::string(JNA_SCHEMA_DIR) + "/api.schema.json");
  if (!in) throw std::runtime_error("cannot open api.schema.json");
  return SchemaValidator(json::parse(in));
}

}  // namespace jna::testkit
