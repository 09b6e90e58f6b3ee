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

#ifndef NARROWBAND_CORE_ADDRESSING_HPP
#define NARROWBAND_CORE_ADDRESSING_HPP

#include <optional>
#include <string>
#include <vector>

#include "pulse_sequence.hpp"

namespace narrowband {

/// Gaussian addressing beam along the trap axis, micrometers. The Rabi
/// frequency follows the field amplitude, so eps(x) = exp(-(x-c)^2 / w^2)
/// with w the 1/e^2 intensity radius.
struct BeamModel {
  double waist_radius_um = 22.1;
  double center_um = 0.0;
};

/// Published 1/e^2 waist of 44.2 um read as a diameter.
inline constexpr double kDefaultWaistRadiusUm = 22.1;

/// Multiplicative visibility applied to ideal populations.
struct DetectionModel {
  double fidelity = 1.0;
};

enum class SweepKind { epsilon, position };

struct SweepSpec {
  SweepKind kind = SweepKind::epsilon;
  double lo = 0.0;
  double hi = 1.0;
  int points = 101;
  std::vector<PulseSequence> sequences;
  DetectionModel detection;
  std::optional<BeamModel> beam;
};

struct SweepTable {
  std::string abscissa;  // "eps" or "x_um"
  std::vector<double> grid;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[column][row]
};

/// fidelity * |<0|U_eps|1>|^2.
double inversion(const PulseSequence &seq, double eps,
                 const DetectionModel &det);

double beam_epsilon(const BeamModel &beam, double x_um);

SweepTable epsilon_sweep(const SweepSpec &spec);
SweepTable position_sweep(const SweepSpec &spec);

/// Width of the region where `values` stays at or above half its maximum,
/// with linear interpolation at the two outermost crossings.
double half_maximum_width(const std::vector<double> &grid,
                          const std::vector<double> &values);

}  // namespace narrowband

#endif  // NARROWBAND_CORE_ADDRESSING_HPP
