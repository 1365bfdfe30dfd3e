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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgvqe {

// One `key = value` entry with its 1-based source line.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// Flat key=value text. Blank lines and lines starting with '#' are skipped,
// whitespace around keys and values is trimmed, and a repeated key is an
// error. Throws ConfigError naming `source` and the line.
std::vector<ConfigEntry> parse_key_value(std::istream& in, std::string_view source = "<config>");

std::vector<ConfigEntry> load_key_value_file(const std::string& path);

// Value parsers; all throw ConfigError mentioning `key`.
std::uint64_t parse_u64(std::string_view key, std::string_view text);
int parse_int(std::string_view key, std::string_view text);
double parse_real(std::string_view key, std::string_view text);
bool parse_bool(std::string_view key, std::string_view text);
// Comma-separated, surrounding whitespace trimmed, empty items rejected.
std::vector<std::string> split_list(std::string_view key, std::string_view text);
// "LO..HI" or a single "N".
std::pair<int, int> parse_range(std::string_view key, std::string_view text);

}  // namespace mgvqe
