#pragma once

// JSON records for spans, families and evaluation results. Every record
// carries "schema": "unbias/1" and a "kind".

#include <optional>
#include <string>
#include <vector>

#include "unbias/finspan.hpp"

namespace unbias {

inline constexpr const char* kRecordSchema = "unbias/1";

std::string write_span_record(const Span& s);
// Accepts a span record or anything carrying one under "span"; throws RecordFormatError.
Span read_span_record(const std::string& text);

// Objects as strings (DSL object terms, or sizes for the bijection model).
// A null entry stays empty and is reported by the caller.
std::vector<std::optional<std::string>> read_family_record(const std::string& text);
std::string write_family_record(const std::vector<std::string>& objects);

}  // namespace unbias
