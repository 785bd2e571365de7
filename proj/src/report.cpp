#include "wekit/report.hpp"

#include <cmath>
#include <cstdio>

namespace wekit {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ConfigEntry cfg(const std::string& key, const std::string& text) {
  return ConfigEntry{key, "\"" + json_escape(text) + "\""};
}
ConfigEntry cfg(const std::string& key, double v) { return ConfigEntry{key, format_g17(v)}; }
ConfigEntry cfg(const std::string& key, int v) { return ConfigEntry{key, std::to_string(v)}; }
ConfigEntry cfg(const std::string& key, bool v) {
  return ConfigEntry{key, v ? "true" : "false"};
}

CheckRow near(const std::string& name, double value, double expected, double tol) {
  return CheckRow{name, value, expected, tol, std::abs(value - expected) <= tol};
}

CheckRow below(const std::string& name, double value, double bound) {
  return CheckRow{name, value, std::nullopt, bound, value <= bound};
}

CheckRow claim(const std::string& name, bool ok) {
  return CheckRow{name, ok ? 1.0 : 0.0, std::nullopt, std::nullopt, ok};
}

std::string to_json(const RunReport& report) {
  std::string out = "{\n  \"command\": \"" + json_escape(report.command) + "\",\n";
  out += "  \"config\": {";
  for (size_t i = 0; i < report.config.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(report.config[i].key) + "\": " + report.config[i].literal;
  }
  out += "},\n  \"results\": [\n";
  for (size_t i = 0; i < report.results.size(); ++i) {
    const CheckRow& r = report.results[i];
    out += "    {\"name\": \"" + json_escape(r.name) + "\", \"value\": " +
           format_g17(r.value);
    if (r.expected) out += ", \"expected\": " + format_g17(*r.expected);
    if (r.tol) out += ", \"tol\": " + format_g17(*r.tol);
    out += std::string(", \"pass\": ") + (r.pass ? "true" : "false") + "}";
    if (i + 1 < report.results.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n  \"pass\": ";
  out += report.pass ? "true" : "false";
  out += "\n}\n";
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out += '"';
      for (char ch : f) {
        out += ch;
        if (ch == '"') out += '"';
      }
      out += '"';
    } else {
      out += f;
    }
  }
  out += "\n";
  return out;
}

}  // namespace wekit
