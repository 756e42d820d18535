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

#ifndef NEGSCOPE_DIGEST_H_
#define NEGSCOPE_DIGEST_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace negscope {

// 64-bit FNV-1a. Used for provenance digests and model fingerprints, not for
// anything security related.
class Fnv1a {
 public:
  void update(std::string_view bytes);
  void update(std::uint64_t value);
  void update(double value);
  void update(std::span<const double> values);

  std::uint64_t value() const { return hash_; }
  std::string hex() const;

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string digest_hex(std::string_view bytes);

// Digest of a file's bytes; throws DataError if unreadable.
std::string file_digest_hex(const std::string &path);

}  // namespace negscope

#endif  // NEGSCOPE_DIGEST_H_
