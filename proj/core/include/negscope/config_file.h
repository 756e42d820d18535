// Copyright 2026 The negscope Authors.
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

#ifndef NEGSCOPE_CONFIG_FILE_H_
#define NEGSCOPE_CONFIG_FILE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace negscope {

// A raw line from a sectioned config file with its 1-based line number.
struct ConfigLine {
  std::size_t number = 0;
  std::string text;
};

struct ConfigSection {
  std::string name;      // empty for lines before the first header
  std::string argument;  // "ما" in "[before ما]"
  std::size_t header_line = 0;
  std::vector<ConfigLine> lines;
};

// Sectioned key-value text: `[name]` or `[name argument]` headers, `#`
// comment lines, blank lines ignored, everything else kept verbatim (trimmed).
// The first section is always the unnamed global one.
std::vector<ConfigSection> parse_config_text(std::string_view text);

// Splits `key = value`; nullopt if the line has no '='.
std::optional<std::pair<std::string, std::string>> split_key_value(
    std::string_view line);

std::string_view trim(std::string_view s);

// Reads a whole file; throws DataError naming the path on failure.
std::string read_file(const std::string &path);

}  // namespace negscope

#endif  // NEGSCOPE_CONFIG_FILE_H_
