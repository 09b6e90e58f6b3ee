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

#ifndef NARROWBAND_CORE_PULSE_SEQUENCE_HPP
#define NARROWBAND_CORE_PULSE_SEQUENCE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "su2.hpp"

namespace narrowband {

/// Wraps an angle into [0, 2pi).
double normalize_phase(double phi);

/// Shortest distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Constant-phase segment: a rotation by theta about the in-plane axis at
/// azimuth phi. Both in radians.
class Pulse {
 public:
  Pulse() = default;
  Pulse(double theta, double phi);

  /// Rebuilds a pulse from an in-plane generator (z must vanish). A zero
  /// vector yields theta = 0, phi = 0.
  static Pulse from_generator(const AlgebraVector &v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  AlgebraVector generator() const;

  friend bool operator==(const Pulse &, const Pulse &) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

struct TargetGate {
  double theta = 0.0;
  double phi = 0.0;
  friend bool operator==(const TargetGate &, const TargetGate &) = default;
};

/// Ordered pulses; index 0 is applied first.
class PulseSequence {
 public:
  PulseSequence() = default;
  explicit PulseSequence(std::string name, std::vector<Pulse> pulses = {},
                         std::optional<TargetGate> target = std::nullopt);

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::span<const Pulse> pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }
  const Pulse &operator[](std::size_t i) const { return pulses_[i]; }
  void append(const Pulse &p) { pulses_.push_back(p); }

  const std::optional<TargetGate> &target() const { return target_; }
  void set_target(std::optional<TargetGate> t) { target_ = t; }

  friend bool operator==(const PulseSequence &,
                         const PulseSequence &) = default;

 private:
  std::string name_;
  std::vector<Pulse> pulses_;
  std::optional<TargetGate> target_;
};

/// `first` applied before `second`.
PulseSequence concatenate(const PulseSequence &first,
                          const PulseSequence &second);

/// exp(r_L) ... exp(r_2) exp(r_1): later pulses act from the left.
Unitary2 propagator(const PulseSequence &seq);

/// Propagator with every generator multiplied by eps (neighbor qubit).
Unitary2 scaled_propagator(const PulseSequence &seq, double eps);

/// Sum of generator vectors.
AlgebraVector f1(const PulseSequence &seq);

/// Second-order BCH term, (1/2) sum_{l>k} v_l x v_k.
AlgebraVector f2(const PulseSequence &seq);

/// Tolerance on |f1| for a sequence to count as first-order narrowband.
inline constexpr double kNarrowbandTolerance = 1e-8;

/// Leading coefficient of infidelity / eps^4 as eps -> 0, |f2|^2 / 8.
/// Throws not_narrowband when |f1| exceeds kNarrowbandTolerance.
double infidelity_coefficient(const PulseSequence &seq);

/// 1 - |tr U_eps| / 2, evaluated through the traceless part so that values
/// far below machine epsilon keep their relative precision.
double infidelity(const PulseSequence &seq, double eps);

double total_pulse_area(const PulseSequence &seq);

/// Adds beta to every phase; same as conjugating each generator by a Z
/// rotation of angle beta.
PulseSequence phase_advance(const PulseSequence &seq, double beta);

/// Scales X components by lx and Y components by ly.
PulseSequence dilate(const PulseSequence &seq, double lx, double ly);

/// Slope of log infidelity against log eps, least squares over nine
/// geometrically spaced points in [eps_lo, eps_hi].
double suppression_order(const PulseSequence &seq, double eps_lo,
                         double eps_hi);

}  // namespace narrowband

#endif  // NARROWBAND_CORE_PULSE_SEQUENCE_HPP
