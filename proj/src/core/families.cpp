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

#include "families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace narrowband {

using std::numbers::pi;

namespace {

void require_scale(double l, const char *name) {
  if (!std::isfinite(l) || !(l > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                std::string("ask1: ") + name + " must be positive");
  }
}

}  // namespace

PulseSequence sk1(double theta_T, double phi_T, Sk1Convention convention) {
  if (!std::isfinite(theta_T) || theta_T < 0.0 || theta_T > 2.0 * pi) {
    throw Error(ErrorCode::invalid_argument,
                "sk1: target angle must lie in [0, 2pi]");
  }
  if (!std::isfinite(phi_T)) {
    throw Error(ErrorCode::invalid_argument, "sk1: non-finite azimuth");
  }
  const double sign = convention == Sk1Convention::closure ? -1.0 : 1.0;
  const double phi_sk1 = std::acos(sign * theta_T / (4.0 * pi));
  return PulseSequence("sk1",
                       {Pulse(theta_T, phi_T), Pulse(2.0 * pi, phi_T + phi_sk1),
                        Pulse(2.0 * pi, phi_T - phi_sk1)},
                       TargetGate{theta_T, normalize_phase(phi_T)});
}

PulseSequence ask1(double lx, double ly, Sk1Convention convention) {
  require_scale(lx, "lambda_x");
  require_scale(ly, "lambda_y");
  PulseSequence out = dilate(sk1(2.0 * pi, 0.0, convention), lx, ly);
  out.set_name("ask1");
  out.set_target(std::nullopt);
  return out;
}

AxisAngle net_axis(const PulseSequence &seq) {
  return axis_angle(propagator(seq));
}

Alignment align(const AxisAngle &m, double phi_T) {
  if (m.degenerate) {
    throw Error(ErrorCode::degenerate_axis,
                "align: net rotation has no defined axis");
  }
  const double psi = std::atan2(m.axis.y, m.axis.x);
  const double elevation = std::asin(std::clamp(m.axis.z, -1.0, 1.0));
  Alignment out;
  out.beta = normalize_phase(phi_T - psi);
  if (std::abs(elevation) > kTiltTieTolerance) {
    out.delta = elevation;
    const AlgebraVector u{-std::sin(phi_T), std::cos(phi_T), 0.0};
    out.r_prime = -elevation * u;
  }
  return out;
}

Task1Params task1_params(double lx, double ly, double theta_T, double phi_T,
                         Sk1Convention seed) {
  if (!std::isfinite(theta_T) || !(theta_T > 0.0) || theta_T > 2.0 * pi) {
    throw Error(ErrorCode::invalid_params,
                "task1: target angle must lie in (0, 2pi]");
  }
  if (!std::isfinite(phi_T)) {
    throw Error(ErrorCode::invalid_params, "task1: non-finite azimuth");
  }
  const AxisAngle m = net_axis(ask1(lx, ly, seed));
  if (!(std::abs(m.angle - theta_T) <= kConstraintTolerance)) {
    throw Error(ErrorCode::invalid_params,
                "task1: ask1(" + std::to_string(lx) + ", " +
                    std::to_string(ly) + ") rotates by " +
                    std::to_string(m.angle) + ", not the target " +
                    std::to_string(theta_T));
  }
  Task1Params p{lx, ly, theta_T, normalize_phase(phi_T), 0.0, 0.0, seed};
  if (m.degenerate) {
    p.beta = normalize_phase(phi_T + pi / 3.0);
    return p;
  }
  const Alignment a = align(m, phi_T);
  p.delta = a.delta;
  p.beta = a.beta;
  return p;
}

PulseSequence task1(const Task1Params &params) {
  if (!(std::abs(params.delta) <= pi / 2.0) || !std::isfinite(params.beta)) {
    throw Error(ErrorCode::invalid_params,
                "task1: tilt must satisfy |delta| <= pi/2");
  }
  if (!std::isfinite(params.theta_T) || !(params.theta_T > 0.0) ||
      params.theta_T > 2.0 * pi || !std::isfinite(params.phi_T)) {
    throw Error(ErrorCode::invalid_params, "task1: bad target gate");
  }
  const PulseSequence inner =
      ask1(params.lambda_x, params.lambda_y, params.seed);
  const double net = net_axis(inner).angle;
  if (!(std::abs(net - params.theta_T) <= kConstraintTolerance)) {
    throw Error(ErrorCode::invalid_params,
                "task1: (lambda_x, lambda_y) is off the constraint curve for "
                "the target angle");
  }

  // The tilt pulse is a positive angle about phi_T + pi/2 or phi_T + 3pi/2,
  // the side given by -delta. A zero tilt keeps the side that nonzero tilts
  // take for targets on the same side of pi.
  bool minus_side;
  if (params.delta > kTiltTieTolerance) {
    minus_side = true;
  } else if (params.delta < -kTiltTieTolerance) {
    minus_side = false;
  } else {
    minus_side = params.theta_T > pi;
  }
  const double tilt_phi = params.phi_T + (minus_side ? 1.5 * pi : 0.5 * pi);
  const double tilt = std::abs(params.delta);

  PulseSequence out("task1", {}, TargetGate{params.theta_T, params.phi_T});
  out.append(Pulse(tilt, tilt_phi));
  const PulseSequence advanced = phase_advance(inner, params.beta);
  for (const Pulse &p : advanced.pulses()) out.append(p);
  out.append(Pulse(tilt, tilt_phi + pi));

  const Unitary2 target =
      expm({params.theta_T * std::cos(params.phi_T),
            params.theta_T * std::sin(params.phi_T), 0.0});
  if (!(trace_fidelity(propagator(out), target) >= 1.0 - 1e-10)) {
    throw Error(ErrorCode::invalid_params,
                "task1: tilt and phase advance do not realize the target gate");
  }
  return out;
}

}  // namespace narrowband
