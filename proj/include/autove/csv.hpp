// Copyright 2026 The AutoVE Lab Authors.
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

#ifndef AUTOVE_CSV_HPP_
#define AUTOVE_CSV_HPP_

#include <charconv>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "autove/bitmap.hpp"

namespace autove {

// Shortest round-trip decimal form; stable across runs.
inline std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return {buf, end};
}

inline double parse_real(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

inline std::vector<std::string> split(std::string_view line, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            std::initializer_list<std::string_view> header)
      : path_(path), out_(path) {
    open(header);
  }
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
      : path_(path), out_(path) {
    open(header);
  }

  CsvWriter& operator<<(std::string_view field) {
    sep();
    out_ << field;
    return *this;
  }
  CsvWriter& operator<<(const std::string& field) {
    return *this << std::string_view(field);
  }
  CsvWriter& operator<<(const char* field) { return *this << std::string_view(field); }
  CsvWriter& operator<<(double v) { return *this << format_real(v); }
  CsvWriter& operator<<(int v) { return *this << std::to_string(v); }
  CsvWriter& operator<<(long v) { return *this << std::to_string(v); }
  CsvWriter& operator<<(unsigned long v) { return *this << std::to_string(v); }
  CsvWriter& operator<<(unsigned v) { return *this << std::to_string(v); }
  CsvWriter& operator<<(bool v) { return *this << (v ? "1" : "0"); }

  void end_row() {
    out_ << '\n';
    fresh_ = true;
    if (!out_) throw IoError("write failed: " + path_.string());
  }

 private:
  template <class Range>
  void open(const Range& header) {
    if (!out_) throw IoError("cannot open for writing: " + path_.string());
    bool first = true;
    for (const auto& h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  void sep() {
    if (!fresh_) out_ << ',';
    fresh_ = false;
  }

  std::filesystem::path path_;
  std::ofstream out_;
  bool fresh_ = true;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw IoError("missing CSV column: " + std::string(name));
  }
};

inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.rows.push_back(split(line));
  }
  return t;
}

}  // namespace autove

#endif  // AUTOVE_CSV_HPP_
