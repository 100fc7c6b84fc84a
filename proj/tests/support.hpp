// Copyright 2026 The alphageo Authors
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

#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

#include "alphageo/alphageo.hpp"

#define EXPECT_ERROR_CODE(statement, expected_code)                     \
  do {                                                                  \
    try {                                                               \
      statement;                                                        \
      ADD_FAILURE() << "expected " << alphageo::to_string(expected_code) \
                    << ", nothing was thrown";                          \
    } catch (const alphageo::Error& error_) {                           \
      EXPECT_EQ(error_.code(), expected_code) << error_.what();         \
    }                                                                   \
  } while (false)

namespace testing_support {

inline alphageo::FiniteDistribution dist(std::initializer_list<double> mass) {
  return alphageo::FiniteDistribution::from_mass(std::vector<double>(mass));
}

inline std::vector<double> masses(const alphageo::FiniteDistribution& p) {
  return {p.mass().begin(), p.mass().end()};
}

inline void expect_mass_near(const alphageo::FiniteDistribution& p,
                             const std::vector<double>& expected,
                             double tolerance) {
  ASSERT_EQ(p.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(p[i], expected[i], tolerance) << "atom " << i;
  }
}

template <typename Vec>
void expect_mass_near_oracle(const alphageo::FiniteDistribution& p,
                             const Vec& expected, double tolerance) {
  ASSERT_EQ(p.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(p[i], static_cast<double>(expected[i]), tolerance)
        << "atom " << i;
  }
}

}  // namespace testing_support
