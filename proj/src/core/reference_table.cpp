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

#include "reference_table.hpp"

#include <numbers>

namespace narrowband {
namespace {

constexpr auto T = Subfamily::time_minimal;
constexpr auto E = Subfamily::error_minimal;

// clang-format off
constexpr std::array<ReferenceRow, 16> kRows{{
    {T, 1, 0.2730, 0.1828, {0.6817, 1.7155, 1.3133, 1.3133, 0.6817},
                           {1.5708, 1.2177, 3.5002, 5.2184, 4.7124}, 5.7055, 0.0910},
    {T, 2, 0.3988, 0.2723, {0.3013, 2.5057, 1.9404, 1.9404, 0.3013},
                           {1.5708, 1.2348, 3.5075, 5.2453, 4.7124}, 6.9890, 0.4308},
    {T, 3, 0.5000, 0.3550, {0.0000, 3.1416, 2.4898, 2.4898, 0.0000},
                           {1.5708, 1.2566, 3.5101, 5.2863, 4.7124}, 8.1213, 1.1510},
    {T, 4, 0.5000, 0.5000, {0.0000, 3.1416, 3.1416, 3.1416, 0.0000},
                           {1.5708, 1.0472, 3.1416, 5.2360, 4.7124}, 9.4248, 2.2830},
    {T, 5, 0.5532, 0.6227, {0.1309, 3.4758, 3.8081, 3.8081, 0.1309},
                           {4.7124, 0.8958, 2.9405, 5.1343, 1.5708}, 11.3539, 4.3347},
    {T, 6, 0.6447, 0.7135, {0.3447, 4.0507, 4.3792, 4.3792, 0.3447},
                           {4.7124, 0.8251, 2.8767, 5.0567, 1.5708}, 13.4984, 7.7300},
    {T, 7, 0.7578, 0.8246, {0.5262, 4.7613, 5.0795, 5.0795, 0.5262},
                           {4.7124, 0.5860, 2.6446, 4.8106, 1.5708}, 15.9728, 14.2640},
    {T, 8, 1.0000, 1.0000, {0.0000, 6.2832, 6.2832, 6.2832, 0.0000},
                           {4.7124, 1.0472, 3.1416, 5.2360, 1.5708}, 18.8496, 36.5284},
    {E, 1, 0.2226, 0.2226, {0.8001, 1.3984, 1.3984, 1.3984, 0.8001},
                           {1.5708, 1.0472, 3.1416, 5.2360, 4.7124}, 5.7953, 0.0896},
    {E, 2, 0.3268, 0.3268, {0.4826, 2.0534, 2.0534, 2.0534, 0.4826},
                           {1.5708, 1.0472, 3.1416, 5.2360, 4.7124}, 7.1255, 0.4167},
    {E, 3, 0.4159, 0.4159, {0.2301, 2.6134, 2.6134, 2.6134, 0.2301},
                           {1.5708, 1.0472, 3.1416, 5.2360, 4.7124}, 8.3002, 1.0932},
    {E, 4, 0.5000, 0.5000, {0.0000, 3.1416, 3.1416, 3.1416, 0.0000},
                           {1.5708, 1.0472, 3.1416, 5.2360, 4.7124}, 9.4248, 2.2830},
    {E, 5, 0.5841, 0.5841, {0.2301, 3.6698, 3.6698, 3.6698, 0.2301},
                           {4.7124, 1.0472, 3.1416, 5.2360, 1.5708}, 11.4696, 4.2510},
    {E, 6, 0.6732, 0.6732, {0.4826, 4.2298, 4.2298, 4.2298, 0.4826},
                           {4.7124, 1.0472, 3.1416, 5.2360, 1.5708}, 13.6545, 7.5020},
    {E, 7, 0.7774, 0.7774, {0.8001, 4.8848, 4.8848, 4.8848, 0.8001},
                           {4.7124, 1.0472, 3.1416, 5.2360, 1.5708}, 16.2547, 13.3445},
    {E, 8, 1.0000, 1.0000, {0.0000, 6.2832, 6.2832, 6.2832, 0.0000},
                           {4.7124, 1.0472, 3.1416, 5.2360, 1.5708}, 18.8496, 36.5284},
}};
// clang-format on

}  // namespace

std::string_view subfamily_label(Subfamily s) {
  return s == Subfamily::time_minimal ? "T_min" : "E_min";
}

double ReferenceRow::net_rotation() const {
  return quarter_turns * std::numbers::pi / 4.0;
}

std::span<const ReferenceRow> reference_table() { return kRows; }

}  // namespace narrowband
