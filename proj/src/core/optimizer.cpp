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

#include "optimizer.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "error.hpp"
#include "scalar_minimize.hpp"

namespace narrowband {

using std::numbers::pi;

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();
constexpr double kRootTolerance = 1e-10;
constexpr int kConstraintCells = 64;
constexpr double kLambdaYTop = 1.2;
constexpr int kOptimizerCells = 128;
constexpr double kLambdaXTolerance = 1e-10;

bool is_full_turn(double theta_T) { return theta_T >= 2.0 * pi - 1e-12; }

void require_target_angle(double theta_T, const char *op) {
  if (!std::isfinite(theta_T) || !(theta_T > 0.0) || theta_T > 2.0 * pi) {
    throw Error(ErrorCode::invalid_argument,
                std::string(op) + ": target angle must lie in (0, 2pi]");
  }
}

double evaluate(Objective objective, const PulseSequence &seq) {
  return objective == Objective::area ? total_pulse_area(seq)
                                      : infidelity_coefficient(seq);
}

}  // namespace

std::string_view objective_label(Objective o) {
  return o == Objective::area ? "area" : "infidelity";
}

double ask1_net_angle(double lx, double ly, Sk1Convention seed) {
  return net_axis(dilate(sk1(2.0 * pi, 0.0, seed), lx, ly)).angle;
}

double solve_constraint(double lx, double theta_T, Sk1Convention seed) {
  if (!std::isfinite(lx) || !(lx > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "solve_constraint: lambda_x must be positive");
  }
  require_target_angle(theta_T, "solve_constraint");
  auto residual = [&](double ly) {
    return ask1_net_angle(lx, ly, seed) - theta_T;
  };

  std::array<double, kConstraintCells + 1> ys{};
  std::array<double, kConstraintCells + 1> gs{};
  for (int j = 0; j <= kConstraintCells; ++j) {
    ys[j] = kLambdaYTop * j / kConstraintCells;
    gs[j] = residual(ys[j]);
  }

  // Net angle is not assumed monotone in lambda_y; walk the cells upward.
  for (int j = 0; j < kConstraintCells; ++j) {
    if (j > 0 && gs[j] == 0.0) return ys[j];
    if ((gs[j] < 0.0) != (gs[j + 1] < 0.0) && gs[j + 1] != 0.0) {
      std::uintmax_t max_iter = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          residual, ys[j], ys[j + 1], gs[j], gs[j + 1],
          boost::math::tools::eps_tolerance<double>(50), max_iter);
      const double root = 0.5 * (bracket.first + bracket.second);
      if (std::abs(residual(root)) < kRootTolerance) return root;
    }
  }
  if (gs[kConstraintCells] == 0.0) return ys[kConstraintCells];

  // No crossing: the curve may touch theta_T without passing it (the
  // full-turn point). Polish the closest sample.
  int best = 1;
  for (int j = 2; j <= kConstraintCells; ++j) {
    if (std::abs(gs[j]) < std::abs(gs[best])) best = j;
  }
  const auto touch = detail::brent_minimize(
      [&](double ly) { return std::abs(residual(ly)); }, ys[best - 1],
      ys[std::min(best + 1, kConstraintCells)], 1e-15);
  if (touch.fx < kRootTolerance) return touch.x;

  throw Error(ErrorCode::no_solution,
              "solve_constraint: no lambda_y in (0, 1.2] reaches net angle " +
                  std::to_string(theta_T) + " at lambda_x = " +
                  std::to_string(lx));
}

CurvePoint project_onto_constraint(double lx, double ly, double theta_T,
                                   Sk1Convention seed) {
  require_target_angle(theta_T, "project_onto_constraint");
  if (is_full_turn(theta_T)) return {1.0, 1.0};
  auto distance2 = [&](double x) {
    try {
      const double y = solve_constraint(x, theta_T, seed);
      return (x - lx) * (x - lx) + (y - ly) * (y - ly);
    } catch (const Error &e) {
      if (e.code() == ErrorCode::no_solution) return kInfeasible;
      throw;
    }
  };
  constexpr double kWindow = 0.01;
  const auto m = detail::brent_minimize(
      distance2, std::max(lx - kWindow, 1e-6), lx + kWindow, 1e-12);
  return {m.x, solve_constraint(m.x, theta_T, seed)};
}

double objective_on_curve(Objective objective, double lx, double theta_T) {
  double ly = 0.0;
  try {
    ly = solve_constraint(lx, theta_T);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::no_solution) return kInfeasible;
    throw;
  }
  return evaluate(objective, task1(task1_params(lx, ly, theta_T, 0.0)));
}

OptimizationResult optimize(Objective objective, double theta_T,
                            double phi_T) {
  require_target_angle(theta_T, "optimize");
  if (!std::isfinite(phi_T)) {
    throw Error(ErrorCode::invalid_argument, "optimize: non-finite azimuth");
  }
  OptimizationResult out;
  out.objective = objective;

  // U = -I is reached only at lambda_x = lambda_y = 1.
  if (is_full_turn(theta_T)) {
    out.params = task1_params(1.0, 1.0, 2.0 * pi, phi_T);
    out.objective_value = evaluate(objective, task1(out.params));
    out.converged = true;
    return out;
  }

  auto f = [&](double lx) { return objective_on_curve(objective, lx, theta_T); };

  int best = 0;
  double best_value = kInfeasible;
  for (int k = 1; k <= kOptimizerCells; ++k) {
    const double v = f(static_cast<double>(k) / kOptimizerCells);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  if (best == 0) {
    throw Error(ErrorCode::no_solution,
                "optimize: no lambda_x in (0, 1] reaches net angle " +
                    std::to_string(theta_T));
  }
  const double best_x = static_cast<double>(best) / kOptimizerCells;

  // Pull each end of the bracket in to the feasibility boundary if needed.
  auto feasible_edge = [&](double outside, double inside) {
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (outside + inside);
      if (std::isfinite(f(mid))) inside = mid; else outside = mid;
    }
    return inside;
  };
  double lo = best > 1 ? static_cast<double>(best - 1) / kOptimizerCells : 1e-6;
  double hi = best < kOptimizerCells
                  ? static_cast<double>(best + 1) / kOptimizerCells
                  : 1.0;
  if (!std::isfinite(f(lo))) lo = feasible_edge(lo, best_x);
  if (!std::isfinite(f(hi))) hi = feasible_edge(hi, best_x);

  const auto polished = detail::brent_minimize(f, lo, hi, kLambdaXTolerance);
  double x = best_x;
  if (polished.fx < best_value ||
      (polished.fx == best_value && polished.x < best_x)) {
    x = polished.x;
  }

  out.params = task1_params(x, solve_constraint(x, theta_T), theta_T, phi_T);
  out.objective_value = evaluate(objective, task1(out.params));
  out.iterations = polished.iterations;
  out.converged = polished.converged;
  return out;
}

std::vector<ConstraintCurvePoint> contour_grid(int n) {
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument, "contour_grid: need n >= 2");
  }
  std::vector<ConstraintCurvePoint> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      ConstraintCurvePoint p;
      p.lambda_x = static_cast<double>(i) / n;
      p.lambda_y = static_cast<double>(j) / n;
      const PulseSequence inner = ask1(p.lambda_x, p.lambda_y);
      p.net_angle = net_axis(inner).angle;
      p.infidelity_coeff = infidelity_coefficient(inner);
      if (p.net_angle > 0.0) {
        p.pulse_area = total_pulse_area(
            task1(task1_params(p.lambda_x, p.lambda_y, p.net_angle, 0.0)));
      } else {
        p.pulse_area = total_pulse_area(inner);
      }
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace narrowband
