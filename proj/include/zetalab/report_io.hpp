#pragma once

// Serialization of AuditReport: JSON (schema in docs/audit_report.schema.json),
// RFC 4180 CSV of the series table, and a plain-text rendering.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "zetalab/audit.hpp"

namespace zetalab {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json number_to_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace detail

inline ordered_json to_json(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, complex>) {
          ordered_json j;
          j["re"] = detail::number_to_json(v.real());
          j["im"] = detail::number_to_json(v.imag());
          return j;
        } else if constexpr (std::is_same_v<T, double>) {
          return detail::number_to_json(v);
        } else {
          return v;
        }
      },
      value);
}

inline ordered_json to_json(const KeyValues& kv) {
  ordered_json j = ordered_json::object();
  for (const auto& e : kv.entries()) j[e.key] = to_json(e.value);
  return j;
}

inline ordered_json to_json(const AuditReport& r) {
  ordered_json j;
  j["claim_id"] = std::string(claim_id_name(r.claim_id));
  j["params"] = to_json(r.params);
  j["metrics"] = to_json(r.metrics);
  j["verdict"] = std::string(verdict_name(r.verdict));
  ordered_json series;
  series["columns"] = r.series.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.series.rows) {
    ordered_json jr = ordered_json::array();
    for (double x : row) jr.push_back(detail::number_to_json(x));
    rows.push_back(std::move(jr));
  }
  series["rows"] = std::move(rows);
  j["series"] = std::move(series);
  return j;
}

/// Shortest round-trip decimal for a double ("%.17g" trimmed to what round-trips).
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

/// Quote a CSV field when it contains a delimiter, quote or line break.
inline std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kCsvEol = "\r\n";

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << kCsvEol;
}

inline void write_csv(std::ostream& os, const SeriesTable& table) {
  write_csv_row(os, table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (double x : row) fields.push_back(format_double(x));
    write_csv_row(os, fields);
  }
}

inline std::string scalar_text(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, complex>) {
          return format_double(v.real()) + (std::signbit(v.imag()) ? "-" : "+") +
                 format_double(std::abs(v.imag())) + "i";
        } else {
          return v;
        }
      },
      value);
}

inline void write_text(std::ostream& os, const AuditReport& r) {
  os << claim_cli_name(r.claim_id) << " (" << claim_id_name(r.claim_id) << "): " << verdict_name(r.verdict) << '\n';
  for (const auto& e : r.params.entries()) os << "  param  " << e.key << " = " << scalar_text(e.value) << '\n';
  for (const auto& e : r.metrics.entries()) os << "  metric " << e.key << " = " << scalar_text(e.value) << '\n';
}

}  // namespace zetalab
