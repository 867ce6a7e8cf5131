#include "unbias/records.hpp"

#include <json.hpp>

#include "unbias/error.hpp"

namespace unbias {

namespace {

using nlohmann::json;

json parse_record(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::RecordFormatError, std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::RecordFormatError, "record must be a JSON object");
  if (!j.contains("schema") || j["schema"] != kRecordSchema)
    fail(Errc::RecordFormatError, std::string("missing or unsupported schema (expected \"") + kRecordSchema + "\")");
  if (!j.contains("kind") || !j["kind"].is_string()) fail(Errc::RecordFormatError, "missing kind");
  return j;
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    fail(Errc::RecordFormatError, std::string("field '") + key + "' must be a non-negative integer");
  return j[key].get<std::size_t>();
}

std::vector<std::size_t> get_images(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) fail(Errc::RecordFormatError, std::string("field '") + key + "' must be an array");
  std::vector<std::size_t> out;
  for (const json& v : j[key]) {
    if (!v.is_number_unsigned()) fail(Errc::RecordFormatError, std::string("field '") + key + "' must hold non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

Span span_from_json(const json& j) {
  const std::size_t apex = get_size(j, "apex");
  const std::size_t source = get_size(j, "source");
  const std::size_t target = get_size(j, "target");
  auto left = get_images(j, "left");
  auto right = get_images(j, "right");
  if (left.size() != apex || right.size() != apex)
    fail(Errc::RecordFormatError, "legs must have one entry per apex element");
  return Span(FinFun(apex, source, std::move(left)), FinFun(apex, target, std::move(right)));
}

}  // namespace

std::string write_span_record(const Span& s) {
  json j = {{"schema", kRecordSchema}, {"kind", "span"},         {"apex", s.apex()},       {"source", s.source()},
            {"target", s.target()},     {"left", s.left.img()}, {"right", s.right.img()}};
  return j.dump();
}

Span read_span_record(const std::string& text) {
  const json j = parse_record(text);
  if (j["kind"] == "span") return span_from_json(j);
  if (j.contains("span") && j["span"].is_object()) return span_from_json(j["span"]);
  fail(Errc::RecordFormatError, "expected a span record, got kind " + j["kind"].dump());
}

std::vector<std::optional<std::string>> read_family_record(const std::string& text) {
  const json j = parse_record(text);
  if (j["kind"] != "family" && j["kind"] != "unbias-result")
    fail(Errc::RecordFormatError, "expected a family record, got kind " + j["kind"].dump());
  if (!j.contains("objects") || !j["objects"].is_array()) fail(Errc::RecordFormatError, "field 'objects' must be an array");
  std::vector<std::optional<std::string>> out;
  for (const json& v : j["objects"]) {
    if (v.is_null())
      out.emplace_back();
    else if (v.is_string())
      out.emplace_back(v.get<std::string>());
    else if (v.is_number_unsigned())
      out.emplace_back(std::to_string(v.get<std::size_t>()));
    else if (v.is_object() && v.contains("object") && v["object"].is_string())
      out.emplace_back(v["object"].get<std::string>());
    else
      fail(Errc::RecordFormatError, "family entries must be strings, sizes or null");
  }
  return out;
}

std::string write_family_record(const std::vector<std::string>& objects) {
  json j = {{"schema", kRecordSchema}, {"kind", "family"}, {"objects", objects}};
  return j.dump();
}

}  // namespace unbias
