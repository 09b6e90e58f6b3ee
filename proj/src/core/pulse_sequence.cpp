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

#include "pulse_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace narrowband {

using std::numbers::pi;

double normalize_phase(double phi) {
  double r = std::fmod(phi, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  if (r >= 2.0 * pi) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  const double d = normalize_phase(a - b);
  return std::min(d, 2.0 * pi - d);
}

Pulse::Pulse(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw Error(ErrorCode::invalid_argument, "pulse: non-finite angle");
  }
  if (theta < 0.0) {
    throw Error(ErrorCode::invalid_argument, "pulse: negative rotation angle");
  }
  theta_ = theta;
  phi_ = normalize_phase(phi);
}

Pulse Pulse::from_generator(const AlgebraVector &v) {
  if (!v.in_plane()) {
    throw Error(ErrorCode::invalid_argument,
                "pulse: generator has an out-of-plane component");
  }
  const double theta = std::hypot(v.x, v.y);
  if (theta == 0.0) return {};
  return {theta, std::atan2(v.y, v.x)};
}

AlgebraVector Pulse::generator() const {
  return {theta_ * std::cos(phi_), theta_ * std::sin(phi_), 0.0};
}

PulseSequence::PulseSequence(std::string name, std::vector<Pulse> pulses,
                             std::optional<TargetGate> target)
    : name_(std::move(name)), pulses_(std::move(pulses)), target_(target) {}

PulseSequence concatenate(const PulseSequence &first,
                          const PulseSequence &second) {
  PulseSequence out(first.name() + "+" + second.name());
  for (const Pulse &p : first.pulses()) out.append(p);
  for (const Pulse &p : second.pulses()) out.append(p);
  return out;
}

Unitary2 propagator(const PulseSequence &seq) {
  Unitary2 u;
  for (const Pulse &p : seq.pulses()) u = expm(p.generator()) * u;
  return u;
}

Unitary2 scaled_propagator(const PulseSequence &seq, double eps) {
  if (eps == 1.0) return propagator(seq);
  Unitary2 u;
  for (const Pulse &p : seq.pulses()) u = expm(eps * p.generator()) * u;
  return u;
}

AlgebraVector f1(const PulseSequence &seq) {
  AlgebraVector sum;
  for (const Pulse &p : seq.pulses()) sum += p.generator();
  return sum;
}

AlgebraVector f2(const PulseSequence &seq) {
  // sum_{l>k} v_l x v_k = sum_l v_l x (v_1 + ... + v_{l-1})
  AlgebraVector partial;
  AlgebraVector c;
  for (const Pulse &p : seq.pulses()) {
    const AlgebraVector v = p.generator();
    c += commutator(v, partial);
    partial += v;
  }
  return 0.5 * c;
}

double infidelity_coefficient(const PulseSequence &seq) {
  const double residual = f1(seq).norm();
  if (!(residual <= kNarrowbandTolerance)) {
    throw Error(ErrorCode::not_narrowband,
                "infidelity_coefficient: sequence '" + seq.name() +
                    "' is not first-order narrowband (|F1| = " +
                    std::to_string(residual) + ")");
  }
  const AlgebraVector c = f2(seq);
  return dot(c, c) / 8.0;
}

double infidelity(const PulseSequence &seq, double eps) {
  const Unitary2 u = scaled_propagator(seq, eps);
  const AlgebraVector w = u.traceless_part();
  const double cos_half = std::min(1.0, std::abs(u.trace()) / 2.0);
  // 1 - cos = sin^2 / (1 + cos)
  return dot(w, w) / (1.0 + cos_half);
}

double total_pulse_area(const PulseSequence &seq) {
  double area = 0.0;
  for (const Pulse &p : seq.pulses()) area += std::abs(p.theta());
  return area;
}

PulseSequence phase_advance(const PulseSequence &seq, double beta) {
  PulseSequence out(seq.name(), {}, seq.target());
  for (const Pulse &p : seq.pulses()) out.append({p.theta(), p.phi() + beta});
  return out;
}

PulseSequence dilate(const PulseSequence &seq, double lx, double ly) {
  if (!std::isfinite(lx) || !std::isfinite(ly)) {
    throw Error(ErrorCode::invalid_argument, "dilate: non-finite scale");
  }
  PulseSequence out(seq.name(), {}, seq.target());
  for (const Pulse &p : seq.pulses()) {
    const AlgebraVector v = p.generator();
    out.append(Pulse::from_generator({lx * v.x, ly * v.y, 0.0}));
  }
  return out;
}

double suppression_order(const PulseSequence &seq, double eps_lo,
                         double eps_hi) {
  if (!(eps_lo > 0.0) || !(eps_hi > eps_lo) || !std::isfinite(eps_hi)) {
    throw Error(ErrorCode::invalid_argument,
                "suppression_order: need 0 < eps_lo < eps_hi");
  }
  constexpr int kPoints = 9;
  const double step = std::log(eps_hi / eps_lo) / (kPoints - 1);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double lx = std::log(eps_lo) + i * step;
    const double inf = infidelity(seq, std::exp(lx));
    if (!(inf >= 1e-300)) {
      throw Error(ErrorCode::range,
                  "suppression_order: infidelity underflows at eps = " +
                      std::to_string(std::exp(lx)));
    }
    const double ly = std::log(inf);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (kPoints * sxy - sx * sy) / (kPoints * sxx - sx * sx);
}

}  // namespace narrowband
