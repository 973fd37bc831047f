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

#include "mcwit/error.hpp"

namespace mcwit {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument:
            return "invalid_argument";
        case ErrorCode::dimension_mismatch:
            return "dimension_mismatch";
        case ErrorCode::not_hermitian:
            return "not_hermitian";
        case ErrorCode::no_convergence:
            return "no_convergence";
        case ErrorCode::singular:
            return "singular";
        case ErrorCode::out_of_range:
            return "out_of_range";
        case ErrorCode::no_sign_change:
            return "no_sign_change";
        case ErrorCode::imaginary_residue:
            return "imaginary_residue";
        case ErrorCode::parse_error:
            return "parse_error";
        case ErrorCode::io_error:
            return "io_error";
    }
    return "unknown";
}

}  // namespace mcwit
