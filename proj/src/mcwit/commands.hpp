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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcwit/concentration.hpp"
#include "mcwit/scenario.hpp"

namespace mcwit {

/// Text front ends shared by the C API and the command-line tool. Each
/// returns a single-entry Bundle in the requested format ("csv" or "json").

/// PPT threshold of a parameterized family, or the verdict at `value`.
Bundle ppt_command(const std::string &family, const std::vector<std::size_t> &slots, std::optional<double> value,
                   const std::string &format);

Bundle validate_command(const std::string &witness, std::optional<double> b, std::size_t samples, std::uint64_t seed,
                        const std::string &format);

/// `samples` random Psi of dimension d; one line per sample in csv.
Bundle concentrate_command(std::size_t d, MeasurementKind kind, std::size_t samples, std::uint64_t seed,
                           const std::string &format);

}  // namespace mcwit
