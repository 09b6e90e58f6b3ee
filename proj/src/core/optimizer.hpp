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

#ifndef NARROWBAND_CORE_OPTIMIZER_HPP
#define NARROWBAND_CORE_OPTIMIZER_HPP

#include <string_view>
#include <vector>

#include "families.hpp"

namespace narrowband {

/// Net rotation angle of ask1(lx, ly) in [0, 2pi]; accepts ly = 0.
double ask1_net_angle(double lx, double ly,
                      Sk1Convention seed = Sk1Convention::closure);

/// Smallest lambda_y in (0, 1.2] putting ask1(lx, lambda_y) on the net
/// angle theta_T, to 1e-10 in angle. Throws no_solution when the bracket
/// holds no root.
double solve_constraint(double lx, double theta_T,
                        Sk1Convention seed = Sk1Convention::closure);

/// Point on the constraint curve nearest (in the lambda plane) to a
/// rounded pair (lx, ly), searched within 0.01 of lx.
struct CurvePoint {
  double lambda_x = 0.0;
  double lambda_y = 0.0;
};
CurvePoint project_onto_constraint(double lx, double ly, double theta_T,
                                   Sk1Convention seed = Sk1Convention::closure);

enum class Objective { area, infidelity };

std::string_view objective_label(Objective o);

struct OptimizationResult {
  Task1Params params;
  Objective objective = Objective::area;
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Objective of the TASK1 sequence at (lx, solve_constraint(lx, theta_T));
/// +infinity where the constraint has no solution.
double objective_on_curve(Objective objective, double lx, double theta_T);

/// Minimizes the objective over lambda_x in (0, 1] along the constraint
/// curve. Throws no_solution when no lambda_x is feasible.
OptimizationResult optimize(Objective objective, double theta_T, double phi_T);

inline OptimizationResult minimize_area(double theta_T, double phi_T) {
  return optimize(Objective::area, theta_T, phi_T);
}
inline OptimizationResult minimize_infidelity(double theta_T, double phi_T) {
  return optimize(Objective::infidelity, theta_T, phi_T);
}

struct ConstraintCurvePoint {
  double lambda_x = 0.0;
  double lambda_y = 0.0;
  double net_angle = 0.0;
  double pulse_area = 0.0;
  double infidelity_coeff = 0.0;
};

/// n x n samples of (0, 1]^2 at k/n, lambda_x outer. Pulse area is that of
/// the TASK1 realization (phi_T = 0) of each point's own net angle.
std::vector<ConstraintCurvePoint> contour_grid(int n);

}  // namespace narrowband

#endif  // NARROWBAND_CORE_OPTIMIZER_HPP
