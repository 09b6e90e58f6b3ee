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

#ifndef NARROWBAND_CORE_FAMILIES_HPP
#define NARROWBAND_CORE_FAMILIES_HPP

#include "pulse_sequence.hpp"

namespace narrowband {

/// Sign used for the SK1 correction phase. `closure` takes
/// cos(phi_sk1) = -theta / (4 pi), which closes the generator loop;
/// `as_printed` takes +theta / (4 pi) and exists only to demonstrate that the
/// other sign breaks closure.
enum class Sk1Convention { closure, as_printed };

/// (theta_T @ phi_T), (2pi @ phi_T + phi_sk1), (2pi @ phi_T - phi_sk1).
/// Requires 0 <= theta_T <= 2pi.
PulseSequence sk1(double theta_T, double phi_T,
                  Sk1Convention convention = Sk1Convention::closure);

/// Axis-wise dilation of sk1(2pi, 0). Requires lx, ly > 0.
PulseSequence ask1(double lx, double ly,
                   Sk1Convention convention = Sk1Convention::closure);

/// Net rotation of the sequence on the addressed qubit, angle in [0, 2pi].
AxisAngle net_axis(const PulseSequence &seq);

/// |tilt| below this counts as zero when choosing the alignment pulse.
inline constexpr double kTiltTieTolerance = 1e-9;

/// Frame change taking a net rotation axis onto the in-plane direction
/// phi_T: a Z rotation by `beta` followed by the in-plane rotation
/// expm(-r_prime). `delta` is the signed elevation that the tilt removes;
/// r_prime = -delta * (-sin phi_T, cos phi_T, 0).
struct Alignment {
  AlgebraVector r_prime;
  double beta = 0.0;
  double delta = 0.0;
};

/// Throws degenerate_axis when m carries no axis.
Alignment align(const AxisAngle &m, double phi_T);

struct Task1Params {
  double lambda_x = 1.0;
  double lambda_y = 1.0;
  double theta_T = 0.0;  // (0, 2pi]
  double phi_T = 0.0;
  double delta = 0.0;  // |delta| <= pi/2
  double beta = 0.0;
  Sk1Convention seed = Sk1Convention::closure;
};

/// Tolerance on |net angle of ask1 - theta_T| accepted by task1.
inline constexpr double kConstraintTolerance = 1e-8;

/// Fills delta and beta for a point on the constraint curve. The U = -I
/// point (theta_T = 2pi) has no axis; it takes delta = 0 and
/// beta = phi_T + pi/3, the limit along lx = ly.
Task1Params task1_params(double lx, double ly, double theta_T, double phi_T,
                         Sk1Convention seed = Sk1Convention::closure);

/// Five pulses: tilt, the three ASK1 pulses advanced by beta, inverse tilt.
/// Throws invalid_params when the parameters do not realize the target.
PulseSequence task1(const Task1Params &params);

}  // namespace narrowband

#endif  // NARROWBAND_CORE_FAMILIES_HPP
