// SPDX-License-Identifier: Apache-2.0
//
// nfwpt: near-field wireless power transfer antenna placement
// Copyright (C) 2026 The nfwpt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace nfwpt {

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  if (r.ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return std::string(buf, r.ptr);
}

/// Comma-separated, '.' decimal, LF line endings. No quoting: every field the
/// library writes is numeric or a bare identifier.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header) : columns_(header.size()) { row(header); }

  void row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_) throw std::logic_error("csv row has wrong column count");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

  void comment(std::string_view text) { out_ << "# " << text << '\n'; }

  std::string str() const { return out_.str(); }
  std::size_t columns() const noexcept { return columns_; }

private:
  std::size_t columns_;
  std::ostringstream out_;
};

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw IoError("write to " + path + " failed");
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Splits one CSV line on commas.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace nfwpt
