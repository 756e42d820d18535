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

#include "negscope/config_file.h"

#include <fstream>
#include <sstream>

#include "negscope/error.h"

namespace negscope {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<ConfigSection> parse_config_text(std::string_view text) {
  std::vector<ConfigSection> sections(1);
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++number;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw DataError("line " + std::to_string(number) +
                        ": unterminated section header");
      }
      std::string_view inner = trim(line.substr(1, line.size() - 2));
      ConfigSection section;
      section.header_line = number;
      const auto space = inner.find_first_of(" \t");
      if (space == std::string_view::npos) {
        section.name = std::string(inner);
      } else {
        section.name = std::string(inner.substr(0, space));
        section.argument = std::string(trim(inner.substr(space)));
      }
      if (section.name.empty()) {
        throw DataError("line " + std::to_string(number) +
                        ": empty section name");
      }
      sections.push_back(std::move(section));
      continue;
    }
    sections.back().lines.push_back({number, std::string(line)});
  }
  return sections;
}

std::optional<std::pair<std::string, std::string>> split_key_value(
    std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  return std::make_pair(std::string(trim(line.substr(0, eq))),
                        std::string(trim(line.substr(eq + 1))));
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path);
  return ss.str();
}

}  // namespace negscope
