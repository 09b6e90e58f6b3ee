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

// Exercises the shared library strictly through its public C header.

#include <narrowband/narrowband.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

constexpr double kPi = std::numbers::pi;

struct Seq {
  nb_sequence *h = nullptr;
  Seq() = default;
  Seq(const Seq &) = delete;
  Seq &operator=(const Seq &) = delete;
  ~Seq() { nb_sequence_destroy(h); }
};

struct Sw {
  nb_sweep *h = nullptr;
  ~Sw() { nb_sweep_destroy(h); }
};

}  // namespace

TEST_CASE("diagnostics") {
  CHECK(std::string(nb_version()) == "0.1.0");
  CHECK(std::string(nb_status_string(NB_OK)) == "ok");
  CHECK(std::string(nb_status_string(NB_NO_SOLUTION)) == "no solution");
  CHECK(std::string(nb_status_string(static_cast<nb_status>(99))) ==
        "unknown status");
}

TEST_CASE("su(2) entry points") {
  nb_unitary2 u{};
  REQUIRE(nb_expm({kPi, 0, 0}, &u) == NB_OK);
  CHECK(std::abs(u.m[0][1].im + 1.0) < 1e-15);
  CHECK(std::abs(u.m[0][0].re) < 1e-15);

  nb_axis_angle a{};
  REQUIRE(nb_unitary_axis_angle(&u, &a) == NB_OK);
  CHECK(std::abs(a.angle - kPi) < 1e-15);
  CHECK(a.degenerate == 0);

  double f = 0.0;
  nb_unitary2 id{};
  REQUIRE(nb_expm({0, 0, 0}, &id) == NB_OK);
  REQUIRE(nb_trace_fidelity(&u, &id, &f) == NB_OK);
  CHECK(std::abs(f) < 1e-15);

  CHECK(nb_expm({NAN, 0, 0}, &u) == NB_INVALID_ARGUMENT);
  CHECK(std::strlen(nb_last_error_message()) > 0);
  CHECK(nb_expm({0, 0, 0}, nullptr) == NB_INVALID_ARGUMENT);

  nb_unitary2 bad = id;
  bad.m[0][0].re = 3.0;
  CHECK(nb_unitary_axis_angle(&bad, &a) == NB_INVALID_ARGUMENT);
}

TEST_CASE("sequence handles") {
  Seq s;
  REQUIRE(nb_sequence_create("demo", &s.h) == NB_OK);
  CHECK(std::string(nb_sequence_name(s.h)) == "demo");
  CHECK(nb_sequence_length(s.h) == 0);
  REQUIRE(nb_sequence_append(s.h, kPi, 0.0) == NB_OK);
  REQUIRE(nb_sequence_append(s.h, kPi, -kPi / 2) == NB_OK);
  CHECK(nb_sequence_append(s.h, -1.0, 0.0) == NB_INVALID_ARGUMENT);
  CHECK(nb_sequence_length(s.h) == 2);

  double theta = 0, phi = 0;
  REQUIRE(nb_sequence_pulse(s.h, 1, &theta, &phi) == NB_OK);
  CHECK(std::abs(phi - 1.5 * kPi) < 1e-15);
  CHECK(nb_sequence_pulse(s.h, 2, &theta, &phi) == NB_RANGE_ERROR);

  int has = 1;
  REQUIRE(nb_sequence_target(s.h, &has, nullptr, nullptr) == NB_OK);
  CHECK(has == 0);
  REQUIRE(nb_sequence_set_target(s.h, 1.0, -1.0) == NB_OK);
  REQUIRE(nb_sequence_target(s.h, &has, &theta, &phi) == NB_OK);
  CHECK(has == 1);
  CHECK(theta == 1.0);
  CHECK(std::abs(phi - (2 * kPi - 1.0)) < 1e-15);

  Seq c;
  REQUIRE(nb_sequence_clone(s.h, &c.h) == NB_OK);
  REQUIRE(nb_sequence_set_name(c.h, "copy") == NB_OK);
  CHECK(std::string(nb_sequence_name(s.h)) == "demo");
  CHECK(nb_sequence_length(c.h) == 2);

  CHECK(nb_sequence_length(nullptr) == 0);
  CHECK(nb_sequence_append(nullptr, 1.0, 0.0) == NB_INVALID_ARGUMENT);
  nb_sequence_destroy(nullptr);
}

TEST_CASE("functionals through the C interface") {
  Seq s;
  REQUIRE(nb_sk1(kPi, 0.0, &s.h) == NB_OK);
  CHECK(nb_sequence_length(s.h) == 3);

  nb_vector3 v{};
  REQUIRE(nb_sequence_f1(s.h, &v) == NB_OK);
  CHECK(std::hypot(v.x, v.y, v.z) < 1e-12);
  REQUIRE(nb_sequence_f2(s.h, &v) == NB_OK);
  CHECK(std::abs(std::hypot(v.x, v.y, v.z) - std::sqrt(15.0) * kPi * kPi / 4) <
        1e-12);

  double x = 0.0;
  REQUIRE(nb_sequence_total_area(s.h, &x) == NB_OK);
  CHECK(std::abs(x - 5 * kPi) < 1e-14);
  REQUIRE(nb_sequence_infidelity_coefficient(s.h, &x) == NB_OK);
  CHECK(std::abs(x - 15 * std::pow(kPi, 4) / 128) < 1e-11);
  REQUIRE(nb_sequence_infidelity(s.h, 1.0, &x) == NB_OK);
  CHECK(std::abs(x - 1.0) < 1e-12);  // a pi turn is orthogonal to identity
  REQUIRE(nb_sequence_infidelity(s.h, 1e-2, &x) == NB_OK);
  CHECK(std::abs(x / 1e-8 - 15 * std::pow(kPi, 4) / 128) < 0.02);
  REQUIRE(nb_sequence_suppression_order(s.h, 1e-3, 1e-2, &x) == NB_OK);
  CHECK(std::abs(x - 4.0) < 0.1);

  nb_unitary2 u{};
  REQUIRE(nb_sequence_propagator(s.h, 1.0, &u) == NB_OK);
  CHECK(std::abs(u.m[1][0].im + 1.0) < 1e-12);
  nb_axis_angle a{};
  REQUIRE(nb_sequence_net_axis(s.h, &a) == NB_OK);
  CHECK(std::abs(a.angle - kPi) < 1e-12);

  Seq adv, dil;
  REQUIRE(nb_sequence_phase_advance(s.h, kPi / 2, &adv.h) == NB_OK);
  double theta = 0, phi = 0;
  REQUIRE(nb_sequence_pulse(adv.h, 0, &theta, &phi) == NB_OK);
  CHECK(std::abs(phi - kPi / 2) < 1e-15);
  REQUIRE(nb_sequence_dilate(s.h, 0.5, 0.5, &dil.h) == NB_OK);
  REQUIRE(nb_sequence_pulse(dil.h, 0, &theta, &phi) == NB_OK);
  CHECK(std::abs(theta - kPi / 2) < 1e-15);

  Seq single;
  REQUIRE(nb_sequence_create("one", &single.h) == NB_OK);
  REQUIRE(nb_sequence_append(single.h, kPi, 0) == NB_OK);
  CHECK(nb_sequence_infidelity_coefficient(single.h, &x) == NB_NOT_NARROWBAND);
  Seq empty;
  REQUIRE(nb_sequence_create(nullptr, &empty.h) == NB_OK);
  CHECK(nb_sequence_suppression_order(empty.h, 1e-3, 1e-2, &x) ==
        NB_RANGE_ERROR);
}

TEST_CASE("families and optimizer") {
  Seq a;
  REQUIRE(nb_ask1(0.5, 0.5, &a.h) == NB_OK);
  CHECK(nb_ask1(0.0, 0.5, &a.h) == NB_INVALID_ARGUMENT);

  nb_task1_params p{};
  REQUIRE(nb_task1_params_for(0.5, 0.5, kPi, 0.0, &p) == NB_OK);
  CHECK(std::abs(p.beta - kPi / 3) < 1e-9);
  Seq t;
  REQUIRE(nb_task1(&p, &t.h) == NB_OK);
  CHECK(nb_sequence_length(t.h) == 5);
  CHECK(nb_task1_params_for(0.5, 0.5, kPi / 2, 0.0, &p) == NB_INVALID_PARAMS);

  double ly = 0.0;
  REQUIRE(nb_solve_constraint(0.5, kPi, &ly) == NB_OK);
  CHECK(std::abs(ly - 0.5) < 1e-9);
  CHECK(nb_solve_constraint(0.05, 1.5 * kPi, &ly) == NB_NO_SOLUTION);

  nb_optimization_result r{};
  REQUIRE(nb_optimize(NB_OBJECTIVE_INFIDELITY, kPi / 2, 0.0, &r) == NB_OK);
  CHECK(r.converged == 1);
  CHECK(r.objective == NB_OBJECTIVE_INFIDELITY);
  CHECK(std::abs(r.params.lambda_x - 0.3268) < 5e-4);
  CHECK(std::abs(r.objective_value - 0.4167) < 5e-4);
  CHECK(nb_optimize(NB_OBJECTIVE_AREA, 0.0, 0.0, &r) == NB_INVALID_ARGUMENT);
  CHECK(nb_optimize(static_cast<nb_objective>(7), 1.0, 0.0, &r) ==
        NB_INVALID_ARGUMENT);

  size_t count = 0;
  CHECK(nb_contour_grid(4, nullptr, 0, &count) == NB_BUFFER_TOO_SMALL);
  CHECK(count == 16);
  std::vector<nb_contour_point> pts(count);
  REQUIRE(nb_contour_grid(4, pts.data(), pts.size(), &count) == NB_OK);
  CHECK(std::abs(pts[5].net_angle - kPi) < 1e-8);
  CHECK(nb_contour_grid(1, pts.data(), pts.size(), &count) ==
        NB_INVALID_ARGUMENT);
}

TEST_CASE("serialization") {
  Seq s;
  REQUIRE(nb_sk1(1.0, 0.5, &s.h) == NB_OK);
  for (nb_format f : {NB_FORMAT_JSON, NB_FORMAT_CSV}) {
    size_t needed = 0;
    CHECK(nb_sequence_serialize(s.h, f, nullptr, 0, &needed) ==
          NB_BUFFER_TOO_SMALL);
    std::vector<char> small(8);
    CHECK(nb_sequence_serialize(s.h, f, small.data(), small.size(), &needed) ==
          NB_BUFFER_TOO_SMALL);
    CHECK(small.back() == '\0');
    std::vector<char> buf(needed);
    REQUIRE(nb_sequence_serialize(s.h, f, buf.data(), buf.size(), &needed) ==
            NB_OK);
    CHECK(std::strlen(buf.data()) + 1 == needed);

    Seq back;
    REQUIRE(nb_sequence_deserialize(buf.data(), f, &back.h) == NB_OK);
    std::vector<char> again(needed);
    REQUIRE(nb_sequence_serialize(back.h, f, again.data(), again.size(),
                                  &needed) == NB_OK);
    CHECK(std::string(buf.data()) == std::string(again.data()));
  }
  Seq bad;
  CHECK(nb_sequence_deserialize("{", NB_FORMAT_JSON, &bad.h) == NB_PARSE_ERROR);
  CHECK(bad.h == nullptr);

  const auto path =
      (std::filesystem::temp_directory_path() / "nb_capi_seq.csv").string();
  REQUIRE(nb_sequence_write(s.h, path.c_str(), NB_FORMAT_CSV) == NB_OK);
  Seq read;
  REQUIRE(nb_sequence_read(path.c_str(), &read.h) == NB_OK);
  CHECK(nb_sequence_length(read.h) == 3);
  std::filesystem::remove(path);
  CHECK(nb_sequence_read("/nonexistent/nb.json", &read.h) == NB_IO_ERROR);
}

TEST_CASE("reference rows") {
  CHECK(nb_reference_row_count() == 16);
  nb_table_row row{};
  REQUIRE(nb_reference_row(3, &row) == NB_OK);
  CHECK(row.subfamily == NB_SUBFAMILY_T_MIN);
  CHECK(row.lambda_x == 0.5);
  CHECK(row.pulse_area == 9.4248);
  CHECK(nb_reference_row(16, &row) == NB_RANGE_ERROR);

  REQUIRE(nb_reproduce_row(14, &row) == NB_OK);
  CHECK(row.subfamily == NB_SUBFAMILY_E_MIN);
  CHECK(std::abs(row.infidelity_coeff - 13.3445) < 5e-4);

  nb_verify_report rep{};
  REQUIRE(nb_verify_row(0, &rep) == NB_OK);
  CHECK(rep.pass == 1);
  CHECK(rep.max_delta <= 5e-4);
  CHECK(std::strlen(rep.worst_field) > 0);
  CHECK(rep.message[0] == '\0');
  CHECK(nb_verify_row(99, &rep) == NB_RANGE_ERROR);
}

TEST_CASE("addressing simulation") {
  Seq simple, sk, t;
  REQUIRE(nb_sequence_create("simple", &simple.h) == NB_OK);
  REQUIRE(nb_sequence_append(simple.h, kPi, 0) == NB_OK);
  REQUIRE(nb_sk1(kPi, 0, &sk.h) == NB_OK);
  nb_task1_params tp{};
  REQUIRE(nb_task1_params_for(0.5, 0.5, kPi, 0.0, &tp) == NB_OK);
  REQUIRE(nb_task1(&tp, &t.h) == NB_OK);

  double x = 0.0;
  REQUIRE(nb_inversion(simple.h, 0.5, 1.0, &x) == NB_OK);
  CHECK(std::abs(x - 0.5) < 1e-15);
  const nb_beam beam{22.1, 0.0};
  REQUIRE(nb_beam_epsilon(&beam, 22.1, &x) == NB_OK);
  CHECK(std::abs(x - std::exp(-1.0)) < 1e-15);
  const nb_beam flat{0.0, 0.0};
  CHECK(nb_beam_epsilon(&flat, 1.0, &x) == NB_INVALID_ARGUMENT);

  const nb_sequence *both[] = {simple.h, sk.h};
  Sw e;
  REQUIRE(nb_epsilon_sweep(both, 2, 0.0, 1.0, 5, 1.0, &e.h) == NB_OK);
  CHECK(std::string(nb_sweep_abscissa(e.h)) == "eps");
  CHECK(nb_sweep_rows(e.h) == 5);
  CHECK(nb_sweep_columns(e.h) == 2);
  CHECK(std::string(nb_sweep_column_name(e.h, 1)) == "sk1");
  CHECK(nb_sweep_column_name(e.h, 2) == nullptr);
  REQUIRE(nb_sweep_grid(e.h, 2, &x) == NB_OK);
  CHECK(x == 0.5);
  REQUIRE(nb_sweep_value(e.h, 0, 4, &x) == NB_OK);
  CHECK(std::abs(x - 1.0) < 1e-15);
  CHECK(nb_sweep_value(e.h, 2, 0, &x) == NB_RANGE_ERROR);
  CHECK(nb_sweep_grid(e.h, 5, &x) == NB_RANGE_ERROR);

  const nb_sequence *pair[] = {simple.h, t.h};
  Sw p;
  REQUIRE(nb_position_sweep(pair, 2, &beam, -60, 60, 121, 1.0, &p.h) == NB_OK);
  CHECK(std::string(nb_sweep_abscissa(p.h)) == "x_um");
  double w_simple = 0.0, w_task1 = 0.0;
  REQUIRE(nb_sweep_half_maximum_width(p.h, 0, &w_simple) == NB_OK);
  REQUIRE(nb_sweep_half_maximum_width(p.h, 1, &w_task1) == NB_OK);
  CHECK(w_task1 < w_simple);

  Sw bad;
  CHECK(nb_epsilon_sweep(both, 2, 0.0, 1.0, 1, 1.0, &bad.h) ==
        NB_INVALID_ARGUMENT);
  CHECK(nb_position_sweep(both, 2, nullptr, -1, 1, 5, 1.0, &bad.h) ==
        NB_INVALID_ARGUMENT);
  const nb_sequence *holes[] = {simple.h, nullptr};
  CHECK(nb_epsilon_sweep(holes, 2, 0.0, 1.0, 5, 1.0, &bad.h) ==
        NB_INVALID_ARGUMENT);
  CHECK(bad.h == nullptr);
}
