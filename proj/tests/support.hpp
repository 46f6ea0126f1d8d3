#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "doctest.h"

#include "ccc/error.hpp"
#include "ccc/two_sample.hpp"

namespace testing {

template <class F>
void check_error(ccc::ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected ccc::Error");
  } catch (const ccc::Error& e) {
    CHECK(e.code() == code);
  }
}

// "xyyx" -> pooled interleaving, first sample marked by 'x'.
inline ccc::TwoSampleData from_pattern(std::string_view pattern) {
  std::vector<std::uint8_t> is_x;
  for (char c : pattern) is_x.push_back(c == 'x' ? 1 : 0);
  return ccc::TwoSampleData::from_interleaving(is_x);
}

inline std::vector<double> normal_values(std::size_t count, double mean, std::mt19937_64& rng) {
  std::normal_distribution<double> d(mean, 1.0);
  std::vector<double> v(count);
  for (auto& x : v) x = d(rng);
  return v;
}

// The example pair used throughout: x = (0.1, 0.4), y = (0.2, 0.3).
inline ccc::TwoSampleData small_pair() {
  return ccc::build_two_sample({0.1, 0.4}, {0.2, 0.3});
}

}  // namespace testing
