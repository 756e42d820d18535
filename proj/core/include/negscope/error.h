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

#ifndef NEGSCOPE_ERROR_H_
#define NEGSCOPE_ERROR_H_

#include <stdexcept>
#include <string>

namespace negscope {

// Raised for malformed or inconsistent input data and resources: corpora,
// lexicons, configuration files, model files, and infeasible experiment
// setups. Programming errors use the standard exception types.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace negscope

#endif  // NEGSCOPE_ERROR_H_
