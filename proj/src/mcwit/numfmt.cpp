// Copyright 2026 The mcwit Authors
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

#include "mcwit/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace mcwit {

namespace {
constexpr int kSignificantDigits = 15;
}

double round_significant(double value) {
    if (value == 0.0) {
        return 0.0;  // folds -0.0
    }
    if (!std::isfinite(value)) {
        return value;
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, kSignificantDigits - 1);
    double out = 0;
    std::from_chars(buf, res.ptr, out);
    return out;
}

std::string format_number(double value) {
    double r = round_significant(value);
    char buf[64];
    // Shortest round-trip text of the rounded value has at most 15 significant digits.
    auto res = std::to_chars(buf, buf + sizeof(buf), r);
    return std::string(buf, res.ptr);
}

}  // namespace mcwit
