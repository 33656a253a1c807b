#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace ringlab::cli {

using json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "ringlab.report/1";

enum class Format { json, csv, table };

std::optional<Format> parse_format(std::string_view name);

/// Serializes a report. JSON is the full document with sorted keys and a
/// trailing newline; CSV and table render payload.table only.
std::string emit_report(const json& report, Format format);

/// Writes the report to `out`. A report whose status is "failed" returns 3
/// and leaves a note on `err`; anything else returns 0.
int finish_report(const json& report, Format format, std::ostream& out, std::ostream& err);

/// {"columns": [...], "rows": []}
json make_table(std::initializer_list<std::string_view> columns);

}  // namespace ringlab::cli
