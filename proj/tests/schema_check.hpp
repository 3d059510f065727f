#pragma once

// Validator for the subset of JSON Schema the shipped report schema uses:
// type / enum / const / required / properties / items / oneOf.

#include <string>

#include <nlohmann/json.hpp>

namespace girth5::test {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate_schema(const nlohmann::json& value,
                            const nlohmann::json& schema, std::string* why) {
  if (schema.contains("const")) {
    if (value != schema["const"]) {
      if (why) *why = "const mismatch";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& e : schema["enum"]) any = any || value == e;
    if (!any) {
      if (why) *why = "enum mismatch: " + value.dump();
      return false;
    }
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const auto& alt : t)
        ok = ok || type_matches(value, alt.get<std::string>());
    }
    if (!ok) {
      if (why) *why = "type mismatch: " + value.dump();
      return false;
    }
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) {
        if (why) *why = "missing key " + key.get<std::string>();
        return false;
      }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !validate_schema(value[key], sub, why)) {
        if (why) *why = key + ": " + *why;
        return false;
      }
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value)
      if (!validate_schema(item, schema["items"], why)) return false;
  }
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& alt : schema["oneOf"]) {
      std::string ignored;
      if (validate_schema(value, alt, &ignored)) ++hits;
    }
    if (hits != 1) {
      if (why) *why = "oneOf matched " + std::to_string(hits) + " branches";
      return false;
    }
  }
  return true;
}

}  // namespace girth5::test
