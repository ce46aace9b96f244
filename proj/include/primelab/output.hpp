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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "primelab/log_value.hpp"

namespace primelab {

enum class Format { kCsv, kJson };
Format parse_format(const std::string& s);  // "csv" or "json"
std::string format_name(Format f);

// One table cell: the rounded display text and the full-precision text.
struct Cell {
  std::string display;
  std::string full;

  static Cell text(std::string s) { return {s, std::move(s)}; }
  static Cell integer(std::int64_t v);
  static Cell real(double v, int sig = 4);
  static Cell fixed(double v, int decimals);
  static Cell percent(double v, int decimals = 2) { return fixed(v, decimals); }  // v already in percent
  static Cell log_value(const LogValue& v, int sig = 3);
  static Cell missing() { return text("-"); }
  template <class T>
  static Cell maybe(const std::optional<T>& v, Cell (*f)(const T&)) {
    return v ? f(*v) : missing();
  }
};

struct TableData {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

// Writes <dir>/<name>.<ext> (display) and <dir>/<name>.<ext>.full, each via
// a temporary file and rename. Returns the display path.
std::filesystem::path write_table(const TableData& t, const std::filesystem::path& dir, Format f,
                                  const std::string& config_tag);

std::string render_csv(const TableData& t, bool full, const std::string& config_tag);
std::string render_json(const TableData& t, bool full, const std::string& config_tag);

void write_atomic(const std::filesystem::path& path, const std::string& content);

std::uint64_t fnv1a(const std::string& s);
std::string hex64(std::uint64_t v);

}  // namespace primelab
