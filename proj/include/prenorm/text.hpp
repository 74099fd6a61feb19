// Copyright 2026 The prenorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRENORM_TEXT_HPP_
#define PRENORM_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace prenorm {

std::string strip_spaces(std::string_view text);
// Whole-string decimal integer; kParse otherwise.
long long parse_int(std::string_view text);
// Splits "a,b,[c,d]" at top-level commas.
std::vector<std::string> split_top_level(std::string_view text);
// "[...]" -> "..."; kParse when the brackets are missing.
std::string_view unbracket(std::string_view text);

}  // namespace prenorm

#endif  // PRENORM_TEXT_HPP_
