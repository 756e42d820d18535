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

#ifndef NEGSCOPE_DEFAULTS_H_
#define NEGSCOPE_DEFAULTS_H_

#include <string_view>

namespace negscope {

// Contents of data/negation.conf and data/stopwords.txt, compiled in.
std::string_view default_negation_config_text();
std::string_view default_stopwords_text();

}  // namespace negscope

#endif  // NEGSCOPE_DEFAULTS_H_
