// Copyright 2026 The narrowband Authors
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

#ifndef NARROWBAND_TESTS_TEST_SUPPORT_HPP
#define NARROWBAND_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "doctest.h"
#include "pulse_sequence.hpp"
#include "su2.hpp"

namespace narrowband::testing {

inline constexpr double kPi = std::numbers::pi;

// Absolute comparison; doctest::Approx is relative, which hides errors near
// zero.
#define CHECK_NEAR(actual, expected, tol)                   \
  do {                                                      \
    const double nb_a_ = (actual);                          \
    const double nb_e_ = (expected);                        \
    INFO(#actual " = " << nb_a_ << ", expected " << nb_e_); \
    CHECK(std::abs(nb_a_ - nb_e_) <= (tol));                \
  } while (0)

#define CHECK_VEC_NEAR(actual, expected, tol)            \
  do {                                                   \
    const ::narrowband::AlgebraVector nb_va_ = (actual); \
    const ::narrowband::AlgebraVector nb_ve_ = (expected); \
    CHECK_NEAR(nb_va_.x, nb_ve_.x, tol);                 \
    CHECK_NEAR(nb_va_.y, nb_ve_.y, tol);                 \
    CHECK_NEAR(nb_va_.z, nb_ve_.z, tol);                 \
  } while (0)

#define CHECK_PHASE_NEAR(actual, expected, tol) \
  CHECK_NEAR(::narrowband::angular_distance((actual), (expected)), 0.0, tol)

// Fixed-seed generator so every property run draws the same cases.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  AlgebraVector vector(double scale) {
    return {uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale)};
  }

  PulseSequence in_plane_sequence(int min_len, int max_len) {
    const int n = std::uniform_int_distribution<int>(min_len, max_len)(engine_);
    PulseSequence seq("random");
    for (int i = 0; i < n; ++i)
      seq.append(Pulse(uniform(0.0, 2.0 * kPi), uniform(0.0, 2.0 * kPi)));
    return seq;
  }

 private:
  std::mt19937_64 engine_;
};

inline Unitary2 target_gate(double theta, double phi) {
  return expm({theta * std::cos(phi), theta * std::sin(phi), 0.0});
}

}  // namespace narrowband::testing

#endif  // NARROWBAND_TESTS_TEST_SUPPORT_HPP
