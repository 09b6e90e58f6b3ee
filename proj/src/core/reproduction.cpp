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

#include "reproduction.hpp"

#include <cmath>

#include "error.hpp"

namespace narrowband {

Objective objective_for(Subfamily s) {
  return s == Subfamily::time_minimal ? Objective::area : Objective::infidelity;
}

ReproducedRow reproduce_from_sequence(Subfamily s, const Task1Params &params,
                                      const PulseSequence &seq) {
  if (seq.size() != 5) {
    throw Error(ErrorCode::invalid_argument,
                "reproduce: TASK1 sequences have five pulses");
  }
  ReproducedRow r;
  r.subfamily = s;
  r.net_rotation = params.theta_T;
  r.lambda_x = params.lambda_x;
  r.lambda_y = params.lambda_y;
  for (std::size_t i = 0; i < 5; ++i) {
    r.thetas[i] = seq[i].theta();
    r.phis[i] = seq[i].phi();
  }
  r.pulse_area = total_pulse_area(seq);
  r.infidelity_coeff = infidelity_coefficient(seq);
  return r;
}

ReproducedRow reproduce(Subfamily s, double net_rotation) {
  const OptimizationResult opt = optimize(objective_for(s), net_rotation, 0.0);
  return reproduce_from_sequence(s, opt.params, task1(opt.params));
}

std::vector<ReproducedRow> reproduce_table() {
  std::vector<ReproducedRow> out;
  for (const ReferenceRow &row : reference_table()) {
    out.push_back(reproduce(row.subfamily, row.net_rotation()));
  }
  return out;
}

RowReport verify_row(std::size_t index, const VerifyOptions &options) {
  const auto table = reference_table();
  if (index >= table.size()) {
    throw Error(ErrorCode::invalid_argument, "verify: row index out of range");
  }
  const ReferenceRow &row = table[index];
  RowReport report;
  report.index = index;

  auto check = [&](std::string field, double printed, double computed,
                   bool angular = false) {
    const double delta = angular ? angular_distance(printed, computed)
                                 : std::abs(printed - computed);
    // A NaN delta sticks as the worst field and fails the tolerance test.
    if (!std::isnan(report.max_delta) &&
        (report.fields.empty() || !(delta <= report.max_delta))) {
      report.max_delta = delta;
      report.worst_field = field;
    }
    report.fields.push_back({std::move(field), printed, computed, delta});
  };

  try {
    const ReproducedRow opt = reproduce(row.subfamily, row.net_rotation());
    check("opt.lambda_x", row.lambda_x, opt.lambda_x);
    check("opt.lambda_y", row.lambda_y, opt.lambda_y);
    check("opt.pulse_area", row.pulse_area, opt.pulse_area);
    check("opt.infidelity_coeff", row.infidelity_coeff, opt.infidelity_coeff);

    const double theta_T = row.net_rotation();
    const CurvePoint snapped = project_onto_constraint(
        row.lambda_x, row.lambda_y, theta_T, options.seed);
    const Task1Params params = task1_params(
        snapped.lambda_x, snapped.lambda_y, theta_T, 0.0, options.seed);
    const PulseSequence seq = task1(params);
    const ReproducedRow re = reproduce_from_sequence(row.subfamily, params, seq);
    for (std::size_t i = 0; i < 5; ++i) {
      check("theta_" + std::to_string(i + 1), row.thetas[i], re.thetas[i]);
    }
    for (std::size_t i = 0; i < 5; ++i) {
      // The phase of a pulse too short to print carries no information.
      if (std::max(row.thetas[i], re.thetas[i]) < options.tolerance) continue;
      check("phi_" + std::to_string(i + 1), row.phis[i], re.phis[i], true);
    }
    check("pulse_area", row.pulse_area, re.pulse_area);
  } catch (const Error &e) {
    report.error = e.what();
    report.pass = false;
    return report;
  }
  report.pass = report.max_delta <= options.tolerance;
  return report;
}

std::vector<RowReport> verify_reference_table(const VerifyOptions &options) {
  std::vector<RowReport> out;
  for (std::size_t i = 0; i < reference_table().size(); ++i) {
    out.push_back(verify_row(i, options));
  }
  return out;
}

}  // namespace narrowband
