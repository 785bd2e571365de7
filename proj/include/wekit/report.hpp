#pragma once

// Machine-readable run reports. JSON schema:
//   {"command": ..., "config": {...}, "results":
//     [{"name", "value", "expected", "tol", "pass"}, ...], "pass": bool}
// All floats are serialized with 17 significant digits so identical runs
// produce byte-identical files. CSV output is RFC-4180 style with '\n' line
// endings.

#include <optional>
#include <string>
#include <vector>

namespace wekit {

/// %.17g rendering used for every float in reports.
std::string format_g17(double v);

struct CheckRow {
  std::string name;
  double value = 0.0;
  std::optional<double> expected;
  std::optional<double> tol;
  bool pass = false;
};

struct ConfigEntry {
  std::string key;
  std::string literal;  // pre-rendered JSON literal (number, string, bool)
};

struct RunReport {
  std::string command;
  std::vector<ConfigEntry> config;
  std::vector<CheckRow> results;
  bool pass = false;
};

ConfigEntry cfg(const std::string& key, const std::string& text);
ConfigEntry cfg(const std::string& key, double v);
ConfigEntry cfg(const std::string& key, int v);
ConfigEntry cfg(const std::string& key, bool v);

/// A row whose pass flag is |value - expected| <= tol.
CheckRow near(const std::string& name, double value, double expected, double tol);
/// A row whose pass flag is value <= bound.
CheckRow below(const std::string& name, double value, double bound);
/// A boolean claim (value 1/0).
CheckRow claim(const std::string& name, bool ok);

std::string to_json(const RunReport& report);

/// One CSV line; fields containing separators or quotes get quoted.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace wekit
