// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_TESTS_TEST_SUPPORT_HPP
#define ERGCERT_TESTS_TEST_SUPPORT_HPP

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "core/error.hpp"
#include "doctest.h"

namespace doctest {

template <typename T>
struct StringMaker<std::vector<T>> {
  static String convert(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
      if constexpr (std::is_integral_v<T>)
        out += (i ? "," : "") + std::to_string(xs[i]);
      else
        out += i ? ",?" : "?";
    return (out + "]").c_str();
  }
};

} // namespace doctest

namespace test {

template <typename F>
std::optional<ergc::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const ergc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace test

// Passes when expr throws ergc::Error carrying the given code.
#define CHECK_ERROR(expr, expected_code)                                                       \
  CHECK(test::error_of([&] { (void)(expr); }) == std::optional<ergc::ErrorCode>(expected_code))

#endif
