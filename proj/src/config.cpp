// Copyright 2026 The mgvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgvqe/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>

#include "mgvqe/errors.hpp"

namespace mgvqe {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view text, std::string_view want) {
  throw ConfigError("bad value '" + std::string(text) + "' for " + std::string(key) + ": expected " +
                    std::string(want));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text, std::string_view want) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_value(key, text, want);
  }
  return value;
}

}  // namespace

std::vector<ConfigEntry> parse_key_value(std::istream& in, std::string_view source) {
  std::vector<ConfigEntry> entries;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");
    entries.push_back({key, std::string(trim(line.substr(eq + 1))), line_no});
  }
  return entries;
}

std::vector<ConfigEntry> load_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_key_value(in, path);
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  return parse_number<std::uint64_t>(key, text, "a non-negative integer");
}

int parse_int(std::string_view key, std::string_view text) {
  return parse_number<int>(key, text, "an integer");
}

double parse_real(std::string_view key, std::string_view text) {
  const double value = parse_number<double>(key, text, "a real number");
  if (!std::isfinite(value)) bad_value(key, text, "a finite real number");
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  bad_value(key, text, "true or false");
}

std::vector<std::string> split_list(std::string_view key, std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string_view item =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - start));
    if (item.empty()) bad_value(key, text, "a comma-separated list without empty items");
    items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::pair<int, int> parse_range(std::string_view key, std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(key, text);
    return {n, n};
  }
  const int lo = parse_int(key, text.substr(0, dots));
  const int hi = parse_int(key, text.substr(dots + 2));
  if (lo > hi) bad_value(key, text, "LO..HI with LO <= HI");
  return {lo, hi};
}

}  // namespace mgvqe
