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

#ifndef NARROWBAND_CORE_REPRODUCTION_HPP
#define NARROWBAND_CORE_REPRODUCTION_HPP

#include <array>
#include <string>
#include <vector>

#include "families.hpp"
#include "optimizer.hpp"
#include "reference_table.hpp"

namespace narrowband {

/// A table row recomputed at full precision.
struct ReproducedRow {
  Subfamily subfamily = Subfamily::time_minimal;
  double net_rotation = 0.0;
  double lambda_x = 0.0;
  double lambda_y = 0.0;
  std::array<double, 5> thetas{};
  std::array<double, 5> phis{};
  double pulse_area = 0.0;
  double infidelity_coeff = 0.0;
};

Objective objective_for(Subfamily s);

ReproducedRow reproduce_from_sequence(Subfamily s, const Task1Params &params,
                                      const PulseSequence &seq);

/// Runs the subfamily's optimizer at the given net rotation (phi_T = 0).
ReproducedRow reproduce(Subfamily s, double net_rotation);

/// All sixteen rows in reference order.
std::vector<ReproducedRow> reproduce_table();

inline constexpr double kTableTolerance = 5e-4;

struct FieldCheck {
  std::string field;
  double printed = 0.0;
  double computed = 0.0;
  double delta = 0.0;
};

struct RowReport {
  std::size_t index = 0;
  bool pass = false;
  double max_delta = 0.0;
  std::string worst_field;
  std::string error;  // set when synthesis itself failed
  std::vector<FieldCheck> fields;
};

struct VerifyOptions {
  double tolerance = kTableTolerance;
  Sk1Convention seed = Sk1Convention::closure;
};

/// Checks one printed row two ways. The optimizer is rerun for the row's
/// subfamily and angle and compared on (lambda_x, lambda_y, area,
/// coefficient). Then the printed (lambda_x, lambda_y), which are rounded and
/// sit slightly off the constraint curve, are snapped to the nearest curve
/// point and the synthesized pulses and area are compared. Phases use
/// angular distance and are skipped for pulses shorter than the tolerance.
RowReport verify_row(std::size_t index, const VerifyOptions &options = {});

std::vector<RowReport> verify_reference_table(const VerifyOptions &options = {});

}  // namespace narrowband

#endif  // NARROWBAND_CORE_REPRODUCTION_HPP
