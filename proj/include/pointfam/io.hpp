#pragma once

// Text formats shared by the CLI: parameter JSON, 17-significant-digit
// numbers, a deterministic JSON writer, CSV tables and lo:hi:step ranges.

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pointfam/core.hpp"

namespace pointfam::io {

using Json = nlohmann::ordered_json;

/// %.17g; non-finite values print as nan / inf / -inf.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json(std::ostream& os, const Json& j, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent > 0) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << Json(key).dump() << (indent > 0 ? ": " : ":");
        write_json(os, value, indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Short numeric arrays (complex pairs) stay on one line.
      const bool inline_array = j.size() <= 2 && j[0].is_primitive();
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << (inline_array && indent > 0 ? ", " : ",");
        if (!inline_array) pad(depth + 1);
        write_json(os, j[i], indent, depth + 1);
      }
      if (!inline_array) pad(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_double(v) : std::string("null"));
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Deterministic JSON text: insertion-ordered keys, floats at 17 significant digits.
inline std::string dump_json(const Json& j, int indent = 2) {
  std::ostringstream os;
  detail::write_json(os, j, indent, 0);
  return os.str();
}

inline Json complex_json(complex z) { return Json::array({z.real(), z.imag()}); }

inline Json params_to_json(const InteractionParams& p) {
  Json j;
  j["alpha"] = p.alpha();
  j["beta"] = p.beta();
  j["gamma"] = p.gamma();
  j["delta"] = p.delta();
  j["theta"] = p.theta();
  j["mass"] = p.mass();
  return j;
}

inline RawParams raw_params_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("parameter JSON must be an object");
  const auto field = [&](const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("parameter JSON is missing \"") + name + "\"");
    if (!it->is_number()) throw InputError(std::string("parameter \"") + name + "\" must be a number");
    return it->get<double>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key != "alpha" && key != "beta" && key != "gamma" && key != "delta" && key != "theta" && key != "mass") {
      throw InputError("unknown parameter field \"" + key + "\"");
    }
  }
  return {field("alpha"), field("beta"), field("gamma"), field("delta"), field("theta"), field("mass")};
}

/// Parses and validates; JSON syntax errors become InputError, constraint
/// failures keep their own type.
inline InteractionParams parse_params(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid parameter JSON: ") + e.what());
  }
  return validate_params(raw_params_from_json(j));
}

/// "lo:hi:step" -> lo, lo + step, ... up to and including hi (with a step/2
/// rounding guard). Values are lo + i*step, not accumulated sums.
inline std::vector<double> parse_range(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (...) {
      throw InputError("bad range \"" + spec + "\": expected lo:hi:step");
    }
  }
  if (parts.size() != 3) throw InputError("bad range \"" + spec + "\": expected lo:hi:step");
  const double lo = parts[0], hi = parts[1], step = parts[2];
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InputError("bad range \"" + spec + "\": need step > 0 and hi >= lo");
  }
  const double count = std::floor((hi - lo) / step + 0.5);
  if (count > 1e7) throw InputError("range \"" + spec + "\" has too many points");
  std::vector<double> out;
  for (long i = 0; lo + static_cast<double>(i) * step < hi + 0.5 * step; ++i) {
    out.push_back(lo + static_cast<double>(i) * step);
  }
  return out;
}

/// CSV with one header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
      os << '\n';
    }
    return os.str();
  }

  Json json() const {
    Json j;
    j["columns"] = header;
    Json rows_json = Json::array();
    for (const auto& row : rows) rows_json.push_back(row);
    j["rows"] = rows_json;
    return j;
  }
};

/// Numeric CSV rows; a first line that does not parse as numbers is taken as
/// a header and skipped. All rows must have the same width.
inline std::vector<std::vector<double>> read_numeric_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (...) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;
      throw InputError("non-numeric CSV row " + std::to_string(line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("CSV row " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                       " columns, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pointfam::io
