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

#include "addressing.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace narrowband {
namespace {

void validate(const SweepSpec &spec, SweepKind kind) {
  if (spec.kind != kind) {
    throw Error(ErrorCode::invalid_argument, "sweep: wrong sweep kind");
  }
  if (spec.points < 2) {
    throw Error(ErrorCode::invalid_argument, "sweep: need at least 2 points");
  }
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) ||
      !(spec.lo < spec.hi)) {
    throw Error(ErrorCode::invalid_argument, "sweep: need lo < hi");
  }
  const double f = spec.detection.fidelity;
  if (!(f >= 0.0 && f <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "sweep: detection fidelity must lie in [0, 1]");
  }
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g[i] = i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1);
  }
  return g;
}

template <class EpsOf>
SweepTable run_sweep(const SweepSpec &spec, std::string abscissa,
                     EpsOf eps_of) {
  SweepTable t;
  t.abscissa = std::move(abscissa);
  t.grid = linear_grid(spec.lo, spec.hi, spec.points);
  for (const PulseSequence &seq : spec.sequences) {
    t.columns.push_back(seq.name());
    std::vector<double> col;
    col.reserve(t.grid.size());
    for (double g : t.grid) col.push_back(inversion(seq, eps_of(g), spec.detection));
    t.values.push_back(std::move(col));
  }
  return t;
}

}  // namespace

double inversion(const PulseSequence &seq, double eps,
                 const DetectionModel &det) {
  return det.fidelity * std::norm(scaled_propagator(seq, eps)(0, 1));
}

double beam_epsilon(const BeamModel &beam, double x_um) {
  if (!(beam.waist_radius_um > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "beam: waist must be positive");
  }
  const double u = (x_um - beam.center_um) / beam.waist_radius_um;
  return std::exp(-u * u);
}

SweepTable epsilon_sweep(const SweepSpec &spec) {
  validate(spec, SweepKind::epsilon);
  return run_sweep(spec, "eps", [](double eps) { return eps; });
}

SweepTable position_sweep(const SweepSpec &spec) {
  validate(spec, SweepKind::position);
  if (!spec.beam) {
    throw Error(ErrorCode::invalid_argument,
                "position sweep: a beam model is required");
  }
  const BeamModel beam = *spec.beam;
  beam_epsilon(beam, beam.center_um);  // validates the waist
  return run_sweep(spec, "x_um",
                   [&](double x) { return beam_epsilon(beam, x); });
}

double half_maximum_width(const std::vector<double> &grid,
                          const std::vector<double> &values) {
  if (grid.size() != values.size() || grid.size() < 2) {
    throw Error(ErrorCode::invalid_argument,
                "half_maximum_width: grid and values must match");
  }
  const double half = 0.5 * *std::max_element(values.begin(), values.end());
  const std::size_t n = values.size();
  std::size_t first = 0;
  while (first < n && values[first] < half) ++first;
  std::size_t last = n - 1;
  while (last > first && values[last] < half) --last;
  auto cross = [&](std::size_t below, std::size_t above) {
    const double t = (half - values[below]) / (values[above] - values[below]);
    return grid[below] + t * (grid[above] - grid[below]);
  };
  const double left = first == 0 ? grid.front() : cross(first - 1, first);
  const double right = last + 1 == n ? grid.back() : cross(last + 1, last);
  return right - left;
}

}  // namespace narrowband
