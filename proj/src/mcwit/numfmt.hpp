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

#pragma once

#include <string>

namespace mcwit {

/// Shortest decimal text for `value` rounded to 15 significant digits. Uses
/// std::to_chars, so the output never depends on the process locale.
std::string format_number(double value);

/// `value` rounded to 15 significant digits.
double round_significant(double value);

}  // namespace mcwit
