#include "report.hpp"

#include <algorithm>

namespace ringlab::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  return std::nullopt;
}

json make_table(std::initializer_list<std::string_view> columns) {
  json t;
  t["columns"] = json::array();
  for (auto c : columns) t["columns"].push_back(std::string(c));
  t["rows"] = json::array();
  return t;
}

namespace {

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const json& table_of(const json& report) {
  static const json empty = make_table({});
  const auto payload = report.find("payload");
  if (payload == report.end() || !payload->contains("table")) return empty;
  return (*payload)["table"];
}

}  // namespace

std::string emit_report(const json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";

  const json& table = table_of(report);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& c : table["columns"]) header.push_back(c.get<std::string>());
  cells.push_back(header);
  for (const auto& row : table["rows"]) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(cell_text(v));
    cells.push_back(std::move(line));
  }

  std::string out;
  if (format == Format::csv) {
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) out += ',';
        out += csv_field(line[i]);
      }
      out += "\r\n";
    }
    return out;
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  auto emit_line = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    out += text + "\n";
  };
  emit_line(cells.front());
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit_line(rule);
  for (std::size_t i = 1; i < cells.size(); ++i) emit_line(cells[i]);
  return out;
}

int finish_report(const json& report, Format format, std::ostream& out, std::ostream& err) {
  out << emit_report(report, format);
  if (report.value("status", "ok") == "failed") {
    err << "ringlab: verification failed; counterexample in the report\n";
    return 3;
  }
  return 0;
}

}  // namespace ringlab::cli
