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

#ifndef NARROWBAND_CORE_SCALAR_MINIMIZE_HPP
#define NARROWBAND_CORE_SCALAR_MINIMIZE_HPP

// Brent's bounded minimizer (golden section with parabolic steps). Unlike
// the Boost version it accepts an absolute x tolerance below sqrt(eps) and
// treats non-finite objective values as infeasible rather than feeding them
// into the parabola.

#include <cmath>
#include <limits>

namespace narrowband::detail {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <class F>
ScalarMinimum brent_minimize(F &&f, double lo, double hi, double xtol,
                             int max_iterations = 500) {
  constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt 5) / 2
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  double a = lo, b = hi;
  double x = a + kGolden * (b - a);
  double w = x, v = x;
  double fx = f(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  ScalarMinimum out;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = xtol + 2.0 * kEps * std::abs(x);
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) {
      out.converged = true;
      out.iterations = iter - 1;
      break;
    }
    bool golden = true;
    const bool finite = std::isfinite(fx) && std::isfinite(fw) && std::isfinite(fv);
    if (std::abs(e) > tol1 && finite) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) &&
          p < q * (b - x)) {
        e = d;
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = x < m ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x < m) ? b - x : a - x;
      d = kGolden * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
    out.iterations = iter;
  }
  out.x = x;
  out.fx = fx;
  return out;
}

}  // namespace narrowband::detail

#endif  // NARROWBAND_CORE_SCALAR_MINIMIZE_HPP
