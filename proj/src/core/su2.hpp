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

#ifndef NARROWBAND_CORE_SU2_HPP
#define NARROWBAND_CORE_SU2_HPP

// Closed-form SU(2) and su(2) arithmetic. A vector v names the generator
// -i(v.sigma)/2, so exp of it is a rotation by |v| about v/|v|.

#include <cmath>
#include <complex>

namespace narrowband {

using Complex = std::complex<double>;

struct AlgebraVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  bool in_plane() const { return std::abs(z) < 1e-12; }

  AlgebraVector &operator+=(const AlgebraVector &o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector &b) {
    return a += b;
  }
  friend AlgebraVector operator-(const AlgebraVector &a,
                                 const AlgebraVector &b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend AlgebraVector operator-(const AlgebraVector &a) {
    return {-a.x, -a.y, -a.z};
  }
  friend AlgebraVector operator*(double s, const AlgebraVector &a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const AlgebraVector &, const AlgebraVector &) = default;
};

inline double dot(const AlgebraVector &a, const AlgebraVector &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline AlgebraVector cross(const AlgebraVector &a, const AlgebraVector &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// 2x2 complex matrix; every factory in this library yields det = 1.
class Unitary2 {
 public:
  Unitary2() : m00_(1.0), m01_(0.0), m10_(0.0), m11_(1.0) {}
  Unitary2(Complex m00, Complex m01, Complex m10, Complex m11)
      : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {}

  static Unitary2 identity() { return {}; }

  Complex operator()(int row, int col) const;

  Complex trace() const { return m00_ + m11_; }
  Complex det() const { return m00_ * m11_ - m01_ * m10_; }
  Unitary2 adjoint() const;

  /// Largest of max|U U^dag - I| and |det U - 1|.
  double unitarity_defect() const;

  friend Unitary2 operator*(const Unitary2 &a, const Unitary2 &b);
  Unitary2 operator-() const { return {-m00_, -m01_, -m10_, -m11_}; }

  /// Coefficients w of the traceless part, U = Re(tr U)/2 - i w.sigma.
  AlgebraVector traceless_part() const;

 private:
  Complex m00_, m01_, m10_, m11_;
};

/// Largest entrywise |a - b|.
double max_abs_diff(const Unitary2 &a, const Unitary2 &b);

struct AxisAngle {
  AlgebraVector axis;  // unit vector unless degenerate
  double angle = 0.0;  // [0, 2pi]
  bool degenerate = false;
};

struct Logarithm {
  AlgebraVector generator;
  bool branch_ambiguous = false;
};

inline constexpr double kUnitarityTolerance = 1e-8;
inline constexpr double kDegenerateAxisTolerance = 1e-10;

/// exp(-i(v.sigma)/2). Throws invalid_argument on non-finite components.
Unitary2 expm(const AlgebraVector &v);

/// Generator with |v| in [0, 2pi]; U = -I is returned as (2pi, 0, 0) and
/// flagged ambiguous.
Logarithm logm(const Unitary2 &u);

AxisAngle axis_angle(const Unitary2 &u);

/// v' with R(v.sigma)R^dag = v'.sigma, i.e. the SO(3) image of v.
AlgebraVector conjugate(const AlgebraVector &v, const Unitary2 &r);

/// Vector of the commutator of two generators: a x b.
inline AlgebraVector commutator(const AlgebraVector &a,
                                const AlgebraVector &b) {
  return cross(a, b);
}

/// |tr(U^dag V)| / 2.
double trace_fidelity(const Unitary2 &u, const Unitary2 &v);

/// Z rotation by `angle`, i.e. expm((0, 0, angle)).
inline Unitary2 rotation_z(double angle) { return expm({0.0, 0.0, angle}); }

}  // namespace narrowband

#endif  // NARROWBAND_CORE_SU2_HPP
