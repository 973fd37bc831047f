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

#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <limits>
#include <locale>

#include "mcwit/numfmt.hpp"

namespace mcwit {
namespace {

TEST(FormatNumber, FifteenSignificantDigits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
    EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666666667");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(-0.5), "-0.5");
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(100.0), "100");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
}

TEST(FormatNumber, RoundSignificant) {
    EXPECT_EQ(round_significant(0.1 + 0.2), 0.3);
    EXPECT_EQ(std::signbit(round_significant(-0.0)), false);
    EXPECT_EQ(round_significant(std::sqrt(2.0)), 1.41421356237310);
}

TEST(FormatNumber, IgnoresLocale) {
    const char *names[] = {"de_DE.UTF-8", "fr_FR.UTF-8", "de_DE", "C.UTF-8"};
    for (const char *name : names) {
        if (std::setlocale(LC_ALL, name) != nullptr) {
            break;
        }
    }
    EXPECT_EQ(format_number(1234.5), "1234.5");
    EXPECT_EQ(format_number(0.25), "0.25");
    std::setlocale(LC_ALL, "C");
}

}  // namespace
}  // namespace mcwit
