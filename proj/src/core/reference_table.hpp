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

#ifndef NARROWBAND_CORE_REFERENCE_TABLE_HPP
#define NARROWBAND_CORE_REFERENCE_TABLE_HPP

#include <array>
#include <span>
#include <string_view>

namespace narrowband {

enum class Subfamily { time_minimal, error_minimal };

/// "T_min" or "E_min".
std::string_view subfamily_label(Subfamily s);

/// One published TASK1 sequence, values as printed (four decimals).
struct ReferenceRow {
  Subfamily subfamily;
  int quarter_turns;  // net rotation in units of pi/4
  double lambda_x;
  double lambda_y;
  std::array<double, 5> thetas;
  std::array<double, 5> phis;
  double pulse_area;
  double infidelity_coeff;

  double net_rotation() const;
};

/// The sixteen published rows, T_min first, each in increasing angle.
std::span<const ReferenceRow> reference_table();

}  // namespace narrowband

#endif  // NARROWBAND_CORE_REFERENCE_TABLE_HPP
