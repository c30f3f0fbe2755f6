// Copyright 2026 The optlp Authors
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

#ifndef OPTLP_FORMAT_HPP_
#define OPTLP_FORMAT_HPP_

#include <string>
#include <string_view>

namespace optlp {

// Shortest decimal text that parses back to the same double. '.' is always
// the decimal separator; nonzero values with |v| < 1e-4 use exponent notation.
std::string format_number(double v);

// Strict decimal parse of the whole token (exponent allowed, no locale).
bool parse_number(std::string_view token, double& out);

}  // namespace optlp

#endif  // OPTLP_FORMAT_HPP_
