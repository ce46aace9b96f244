// Copyright 2026 The primelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "primelab/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <stdexcept>

#ifndef PRIMELAB_VERSION
#define PRIMELAB_VERSION "0.0.0"
#endif

namespace primelab {

namespace {

std::string printf_str(const char* fmt, double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, prec, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string trailer(const std::string& config_tag) {
  return std::string("# primelab ") + PRIMELAB_VERSION + " config=" + config_tag;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

std::string format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

Cell Cell::integer(std::int64_t v) { return text(std::to_string(v)); }

Cell Cell::real(double v, int sig) {
  if (!std::isfinite(v)) return text(std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
  return {printf_str("%.*g", v, sig), printf_str("%.*g", v, 17)};
}

Cell Cell::fixed(double v, int decimals) {
  return {printf_str("%.*f", v, decimals), printf_str("%.*g", v, 17)};
}

Cell Cell::log_value(const LogValue& v, int sig) {
  if (v.is_zero()) return text("0");
  std::string sign = v.sign() < 0 ? "-" : "";
  return {sign + v.scientific(sig), sign + v.scientific(17)};
}

void TableData::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table " + name + ": row width " + std::to_string(row.size()) + " vs " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string render_csv(const TableData& t, bool full, const std::string& config_tag) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(full ? row[i].full : row[i].display);
    }
    out += '\n';
  }
  out += trailer(config_tag) + '\n';
  return out;
}

std::string render_json(const TableData& t, bool full, const std::string& config_tag) {
  nlohmann::ordered_json doc;
  doc["table"] = t.name;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = full ? row[i].full : row[i].display;
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["generator"] = trailer(config_tag).substr(2);
  return doc.dump(1) + '\n';
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path write_table(const TableData& t, const std::filesystem::path& dir, Format f,
                                  const std::string& config_tag) {
  std::filesystem::path path = dir / (t.name + "." + format_name(f));
  std::filesystem::path full = path;
  full += ".full";
  if (f == Format::kCsv) {
    write_atomic(path, render_csv(t, false, config_tag));
    write_atomic(full, render_csv(t, true, config_tag));
  } else {
    write_atomic(path, render_json(t, false, config_tag));
    write_atomic(full, render_json(t, true, config_tag));
  }
  return path;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace primelab
