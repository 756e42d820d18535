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

#ifndef NEGSCOPE_UTF8_H_
#define NEGSCOPE_UTF8_H_

#include <optional>
#include <string>
#include <string_view>

namespace negscope::utf8 {

// Strict decoding. Returns nullopt on any malformed sequence, overlong
// encoding, surrogate, or code point above U+10FFFF.
std::optional<std::u32string> decode(std::string_view bytes);

// Lenient decoding: every malformed byte becomes U+FFFD.
std::u32string decode_lenient(std::string_view bytes);

bool is_valid(std::string_view bytes);

void append(std::string &out, char32_t cp);
std::string encode(std::u32string_view text);

}  // namespace negscope::utf8

#endif  // NEGSCOPE_UTF8_H_
