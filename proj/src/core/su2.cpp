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

#include "su2.hpp"

#include <algorithm>
#include <cassert>
#include <numbers>

#include "error.hpp"

namespace narrowband {
namespace {

void require_unitary(const Unitary2 &u, const char *op) {
  const double defect = u.unitarity_defect();
  if (!(defect <= kUnitarityTolerance)) {
    throw Error(ErrorCode::invalid_argument,
                std::string(op) + ": matrix is not special unitary (defect " +
                    std::to_string(defect) + ")");
  }
}

}  // namespace

Complex Unitary2::operator()(int row, int col) const {
  assert(row >= 0 && row < 2 && col >= 0 && col < 2);
  if (row == 0) return col == 0 ? m00_ : m01_;
  return col == 0 ? m10_ : m11_;
}

Unitary2 Unitary2::adjoint() const {
  return {std::conj(m00_), std::conj(m10_), std::conj(m01_), std::conj(m11_)};
}

double Unitary2::unitarity_defect() const {
  const Unitary2 p = *this * adjoint();
  double d = max_abs_diff(p, identity());
  return std::max(d, std::abs(det() - 1.0));
}

Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) {
  return {a.m00_ * b.m00_ + a.m01_ * b.m10_, a.m00_ * b.m01_ + a.m01_ * b.m11_,
          a.m10_ * b.m00_ + a.m11_ * b.m10_, a.m10_ * b.m01_ + a.m11_ * b.m11_};
}

AlgebraVector Unitary2::traceless_part() const {
  return {-(m01_ + m10_).imag() / 2.0, (m10_ - m01_).real() / 2.0,
          -(m00_ - m11_).imag() / 2.0};
}

double max_abs_diff(const Unitary2 &a, const Unitary2 &b) {
  double d = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  }
  return d;
}

Unitary2 expm(const AlgebraVector &v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
    throw Error(ErrorCode::invalid_argument, "expm: non-finite generator");
  }
  const double n = v.norm();
  const double c = std::cos(n / 2.0);
  // sin(n/2)/n, with its Taylor series below the cancellation threshold.
  const double s = n < 1e-4 ? 0.5 - n * n / 48.0 : std::sin(n / 2.0) / n;
  return {Complex(c, -s * v.z), Complex(-s * v.y, -s * v.x),
          Complex(s * v.y, -s * v.x), Complex(c, s * v.z)};
}

AxisAngle axis_angle(const Unitary2 &u) {
  require_unitary(u, "axis_angle");
  const AlgebraVector w = u.traceless_part();
  const double sin_half = w.norm();
  const double cos_half = u.trace().real() / 2.0;
  AxisAngle out;
  out.angle = 2.0 * std::atan2(sin_half, cos_half);
  if (sin_half < kDegenerateAxisTolerance) {
    out.degenerate = true;
    out.angle = cos_half > 0.0 ? 0.0 : 2.0 * std::numbers::pi;
    return out;
  }
  out.axis = (1.0 / sin_half) * w;
  return out;
}

Logarithm logm(const Unitary2 &u) {
  const AxisAngle aa = axis_angle(u);
  if (aa.degenerate) {
    if (aa.angle == 0.0) return {};
    return {{aa.angle, 0.0, 0.0}, true};
  }
  return {aa.angle * aa.axis, false};
}

AlgebraVector conjugate(const AlgebraVector &v, const Unitary2 &r) {
  require_unitary(r, "conjugate");
  // v.sigma as a matrix, conjugated, then read back.
  const Unitary2 h(Complex(v.z, 0.0), Complex(v.x, -v.y), Complex(v.x, v.y),
                   Complex(-v.z, 0.0));
  const Unitary2 m = r * h * r.adjoint();
  return {(m(0, 1) + m(1, 0)).real() / 2.0, (m(1, 0) - m(0, 1)).imag() / 2.0,
          (m(0, 0) - m(1, 1)).real() / 2.0};
}

double trace_fidelity(const Unitary2 &u, const Unitary2 &v) {
  require_unitary(u, "trace_fidelity");
  require_unitary(v, "trace_fidelity");
  return std::min(1.0, std::abs((u.adjoint() * v).trace()) / 2.0);
}

}  // namespace narrowband
