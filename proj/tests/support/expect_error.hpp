// Copyright 2026 The rigikit Authors.
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

#ifndef RIGIKIT_TESTS_SUPPORT_EXPECT_ERROR_HPP_
#define RIGIKIT_TESTS_SUPPORT_EXPECT_ERROR_HPP_

#include <gtest/gtest.h>

#include <functional>
#include <optional>

#include "rigikit/error.hpp"

namespace testing_util {

// Runs fn and returns the code of the rigikit::Error it throws.
inline std::optional<rigikit::ErrorCode> CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const rigikit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing_util

#define EXPECT_RIGIKIT_ERROR(stmt, code_value) \
  EXPECT_EQ(::testing_util::CodeOf([&] { (void)(stmt); }), ::rigikit::ErrorCode::code_value)

#endif  // RIGIKIT_TESTS_SUPPORT_EXPECT_ERROR_HPP_
