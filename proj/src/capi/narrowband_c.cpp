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

#include "narrowband/narrowband.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "addressing.hpp"
#include "error.hpp"
#include "families.hpp"
#include "optimizer.hpp"
#include "pulse_sequence.hpp"
#include "reference_table.hpp"
#include "reproduction.hpp"
#include "sequence_io.hpp"
#include "su2.hpp"

struct nb_sequence {
  narrowband::PulseSequence seq;
};

struct nb_sweep {
  narrowband::SweepTable table;
};

namespace {

using namespace narrowband;

thread_local std::string g_last_error;

nb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return NB_INVALID_ARGUMENT;
    case ErrorCode::not_narrowband: return NB_NOT_NARROWBAND;
    case ErrorCode::degenerate_axis: return NB_DEGENERATE_AXIS;
    case ErrorCode::invalid_params: return NB_INVALID_PARAMS;
    case ErrorCode::no_solution: return NB_NO_SOLUTION;
    case ErrorCode::range: return NB_RANGE_ERROR;
    case ErrorCode::io: return NB_IO_ERROR;
    case ErrorCode::parse: return NB_PARSE_ERROR;
  }
  return NB_INTERNAL_ERROR;
}

nb_status fail(nb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body` and maps any escaping exception onto a status code.
template <typename F>
nb_status guard(F &&body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error &e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(NB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception &e) {
    return fail(NB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(NB_INTERNAL_ERROR, "unknown error");
  }
}

#define NB_REQUIRE(cond, what)                                 \
  do {                                                         \
    if (!(cond)) return fail(NB_INVALID_ARGUMENT, (what));     \
  } while (0)

nb_vector3 to_c(const AlgebraVector &v) { return {v.x, v.y, v.z}; }

AlgebraVector from_c(const nb_vector3 &v) { return {v.x, v.y, v.z}; }

nb_unitary2 to_c(const Unitary2 &u) {
  nb_unitary2 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[r][c] = {u(r, c).real(), u(r, c).imag()};
  return out;
}

Unitary2 from_c(const nb_unitary2 &u) {
  auto z = [&](int r, int c) { return Complex(u.m[r][c].re, u.m[r][c].im); };
  return {z(0, 0), z(0, 1), z(1, 0), z(1, 1)};
}

nb_axis_angle to_c(const AxisAngle &a) {
  return {to_c(a.axis), a.angle, a.degenerate ? 1 : 0};
}

nb_task1_params to_c(const Task1Params &p) {
  return {p.lambda_x, p.lambda_y, p.theta_T, p.phi_T, p.delta, p.beta};
}

Task1Params from_c(const nb_task1_params &p) {
  Task1Params out;
  out.lambda_x = p.lambda_x;
  out.lambda_y = p.lambda_y;
  out.theta_T = p.theta_t;
  out.phi_T = p.phi_t;
  out.delta = p.delta;
  out.beta = p.beta;
  return out;
}

nb_subfamily to_c(Subfamily s) {
  return s == Subfamily::time_minimal ? NB_SUBFAMILY_T_MIN : NB_SUBFAMILY_E_MIN;
}

nb_table_row to_c(const ReproducedRow &r) {
  nb_table_row out{};
  out.subfamily = to_c(r.subfamily);
  out.net_rotation = r.net_rotation;
  out.lambda_x = r.lambda_x;
  out.lambda_y = r.lambda_y;
  std::copy(r.thetas.begin(), r.thetas.end(), out.thetas);
  std::copy(r.phis.begin(), r.phis.end(), out.phis);
  out.pulse_area = r.pulse_area;
  out.infidelity_coeff = r.infidelity_coeff;
  return out;
}

SequenceFormat from_c(nb_format f) {
  return f == NB_FORMAT_CSV ? SequenceFormat::csv : SequenceFormat::json;
}

bool valid_format(nb_format f) {
  return f == NB_FORMAT_JSON || f == NB_FORMAT_CSV;
}

Objective from_c(nb_objective o) {
  return o == NB_OBJECTIVE_INFIDELITY ? Objective::infidelity
                                      : Objective::area;
}

void copy_truncated(char *dst, std::size_t cap, const std::string &src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

nb_status emit(PulseSequence seq, nb_sequence **out) {
  *out = new nb_sequence{std::move(seq)};
  return NB_OK;
}

nb_status sweep(const nb_sequence *const *seqs, size_t count, SweepSpec spec,
                nb_sweep **out) {
  NB_REQUIRE(out, "output pointer is null");
  NB_REQUIRE(seqs || count == 0, "sequence array is null");
  for (size_t i = 0; i < count; ++i) {
    NB_REQUIRE(seqs[i], "sequence handle is null");
    spec.sequences.push_back(seqs[i]->seq);
  }
  SweepTable table = spec.kind == SweepKind::epsilon ? epsilon_sweep(spec)
                                                     : position_sweep(spec);
  *out = new nb_sweep{std::move(table)};
  return NB_OK;
}

}  // namespace

extern "C" {

const char *nb_version(void) { return NARROWBAND_VERSION; }

const char *nb_status_string(nb_status status) {
  switch (status) {
    case NB_OK: return "ok";
    case NB_INVALID_ARGUMENT: return "invalid argument";
    case NB_NOT_NARROWBAND: return "sequence is not narrowband";
    case NB_DEGENERATE_AXIS: return "rotation axis is undefined";
    case NB_INVALID_PARAMS: return "parameters do not realize the target";
    case NB_NO_SOLUTION: return "no solution";
    case NB_RANGE_ERROR: return "value out of range";
    case NB_IO_ERROR: return "i/o error";
    case NB_PARSE_ERROR: return "parse error";
    case NB_BUFFER_TOO_SMALL: return "buffer too small";
    case NB_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char *nb_last_error_message(void) { return g_last_error.c_str(); }

nb_status nb_expm(nb_vector3 generator, nb_unitary2 *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    *out = to_c(expm(from_c(generator)));
    return NB_OK;
  });
}

nb_status nb_unitary_axis_angle(const nb_unitary2 *u, nb_axis_angle *out) {
  return guard([&] {
    NB_REQUIRE(u && out, "null pointer argument");
    *out = to_c(axis_angle(from_c(*u)));
    return NB_OK;
  });
}

nb_status nb_trace_fidelity(const nb_unitary2 *u, const nb_unitary2 *v,
                            double *out) {
  return guard([&] {
    NB_REQUIRE(u && v && out, "null pointer argument");
    *out = trace_fidelity(from_c(*u), from_c(*v));
    return NB_OK;
  });
}

nb_status nb_sequence_create(const char *name, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    return emit(PulseSequence(name ? name : ""), out);
  });
}

void nb_sequence_destroy(nb_sequence *seq) { delete seq; }

nb_status nb_sequence_clone(const nb_sequence *seq, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    return emit(seq->seq, out);
  });
}

nb_status nb_sequence_append(nb_sequence *seq, double theta, double phi) {
  return guard([&] {
    NB_REQUIRE(seq, "sequence handle is null");
    seq->seq.append(Pulse(theta, phi));
    return NB_OK;
  });
}

size_t nb_sequence_length(const nb_sequence *seq) {
  return seq ? seq->seq.size() : 0;
}

nb_status nb_sequence_pulse(const nb_sequence *seq, size_t index,
                            double *theta, double *phi) {
  return guard([&] {
    NB_REQUIRE(seq, "sequence handle is null");
    if (index >= seq->seq.size())
      return fail(NB_RANGE_ERROR, "pulse index out of range");
    if (theta) *theta = seq->seq[index].theta();
    if (phi) *phi = seq->seq[index].phi();
    return NB_OK;
  });
}

const char *nb_sequence_name(const nb_sequence *seq) {
  return seq ? seq->seq.name().c_str() : "";
}

nb_status nb_sequence_set_name(nb_sequence *seq, const char *name) {
  return guard([&] {
    NB_REQUIRE(seq && name, "null pointer argument");
    seq->seq.set_name(name);
    return NB_OK;
  });
}

nb_status nb_sequence_set_target(nb_sequence *seq, double theta, double phi) {
  return guard([&] {
    NB_REQUIRE(seq, "sequence handle is null");
    NB_REQUIRE(std::isfinite(theta) && std::isfinite(phi),
               "target angles must be finite");
    seq->seq.set_target(TargetGate{theta, normalize_phase(phi)});
    return NB_OK;
  });
}

nb_status nb_sequence_target(const nb_sequence *seq, int *has_target,
                             double *theta, double *phi) {
  return guard([&] {
    NB_REQUIRE(seq && has_target, "null pointer argument");
    const auto &t = seq->seq.target();
    *has_target = t ? 1 : 0;
    if (t) {
      if (theta) *theta = t->theta;
      if (phi) *phi = t->phi;
    }
    return NB_OK;
  });
}

nb_status nb_sequence_propagator(const nb_sequence *seq, double eps,
                                 nb_unitary2 *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    NB_REQUIRE(std::isfinite(eps), "eps must be finite");
    *out = to_c(scaled_propagator(seq->seq, eps));
    return NB_OK;
  });
}

nb_status nb_sequence_net_axis(const nb_sequence *seq, nb_axis_angle *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = to_c(net_axis(seq->seq));
    return NB_OK;
  });
}

nb_status nb_sequence_f1(const nb_sequence *seq, nb_vector3 *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = to_c(f1(seq->seq));
    return NB_OK;
  });
}

nb_status nb_sequence_f2(const nb_sequence *seq, nb_vector3 *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = to_c(f2(seq->seq));
    return NB_OK;
  });
}

nb_status nb_sequence_total_area(const nb_sequence *seq, double *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = total_pulse_area(seq->seq);
    return NB_OK;
  });
}

nb_status nb_sequence_infidelity(const nb_sequence *seq, double eps,
                                 double *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = infidelity(seq->seq, eps);
    return NB_OK;
  });
}

nb_status nb_sequence_infidelity_coefficient(const nb_sequence *seq,
                                             double *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = infidelity_coefficient(seq->seq);
    return NB_OK;
  });
}

nb_status nb_sequence_suppression_order(const nb_sequence *seq, double eps_lo,
                                        double eps_hi, double *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = suppression_order(seq->seq, eps_lo, eps_hi);
    return NB_OK;
  });
}

nb_status nb_sequence_phase_advance(const nb_sequence *seq, double beta,
                                    nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    return emit(phase_advance(seq->seq, beta), out);
  });
}

nb_status nb_sequence_dilate(const nb_sequence *seq, double lx, double ly,
                             nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    return emit(dilate(seq->seq, lx, ly), out);
  });
}

nb_status nb_sequence_write(const nb_sequence *seq, const char *path,
                            nb_format format) {
  return guard([&] {
    NB_REQUIRE(seq && path, "null pointer argument");
    NB_REQUIRE(valid_format(format), "unknown format");
    write_sequence(path, seq->seq, from_c(format));
    return NB_OK;
  });
}

nb_status nb_sequence_read(const char *path, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(path && out, "null pointer argument");
    return emit(read_sequence(path), out);
  });
}

nb_status nb_sequence_serialize(const nb_sequence *seq, nb_format format,
                                char *buf, size_t capacity, size_t *needed) {
  return guard([&] {
    NB_REQUIRE(seq, "sequence handle is null");
    NB_REQUIRE(buf || capacity == 0, "buffer is null");
    NB_REQUIRE(valid_format(format), "unknown format");
    const std::string text = serialize(seq->seq, from_c(format));
    if (needed) *needed = text.size() + 1;
    if (capacity > 0) copy_truncated(buf, capacity, text);
    if (capacity < text.size() + 1)
      return fail(NB_BUFFER_TOO_SMALL, "serialization buffer too small");
    return NB_OK;
  });
}

nb_status nb_sequence_deserialize(const char *text, nb_format format,
                                  nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(text && out, "null pointer argument");
    NB_REQUIRE(valid_format(format), "unknown format");
    return emit(deserialize(text, from_c(format)), out);
  });
}

nb_status nb_sk1(double theta_t, double phi_t, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    return emit(sk1(theta_t, phi_t), out);
  });
}

nb_status nb_ask1(double lambda_x, double lambda_y, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    return emit(ask1(lambda_x, lambda_y), out);
  });
}

nb_status nb_task1_params_for(double lambda_x, double lambda_y, double theta_t,
                              double phi_t, nb_task1_params *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    *out = to_c(task1_params(lambda_x, lambda_y, theta_t, phi_t));
    return NB_OK;
  });
}

nb_status nb_task1(const nb_task1_params *params, nb_sequence **out) {
  return guard([&] {
    NB_REQUIRE(params && out, "null pointer argument");
    return emit(task1(from_c(*params)), out);
  });
}

nb_status nb_solve_constraint(double lambda_x, double theta_t,
                              double *lambda_y) {
  return guard([&] {
    NB_REQUIRE(lambda_y, "output pointer is null");
    *lambda_y = solve_constraint(lambda_x, theta_t);
    return NB_OK;
  });
}

nb_status nb_optimize(nb_objective objective, double theta_t, double phi_t,
                      nb_optimization_result *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    NB_REQUIRE(objective == NB_OBJECTIVE_AREA ||
                   objective == NB_OBJECTIVE_INFIDELITY,
               "unknown objective");
    const OptimizationResult r = optimize(from_c(objective), theta_t, phi_t);
    out->params = to_c(r.params);
    out->objective = objective;
    out->objective_value = r.objective_value;
    out->iterations = r.iterations;
    out->converged = r.converged ? 1 : 0;
    return NB_OK;
  });
}

nb_status nb_contour_grid(int n, nb_contour_point *out, size_t capacity,
                          size_t *count) {
  return guard([&] {
    NB_REQUIRE(out || capacity == 0, "output buffer is null");
    const auto grid = contour_grid(n);
    if (count) *count = grid.size();
    const size_t k = std::min(capacity, grid.size());
    for (size_t i = 0; i < k; ++i)
      out[i] = {grid[i].lambda_x, grid[i].lambda_y, grid[i].net_angle,
                grid[i].pulse_area, grid[i].infidelity_coeff};
    if (capacity < grid.size())
      return fail(NB_BUFFER_TOO_SMALL, "contour buffer too small");
    return NB_OK;
  });
}

size_t nb_reference_row_count(void) { return reference_table().size(); }

nb_status nb_reference_row(size_t index, nb_table_row *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    const auto table = reference_table();
    if (index >= table.size())
      return fail(NB_RANGE_ERROR, "row index out of range");
    const ReferenceRow &r = table[index];
    ReproducedRow row;
    row.subfamily = r.subfamily;
    row.net_rotation = r.net_rotation();
    row.lambda_x = r.lambda_x;
    row.lambda_y = r.lambda_y;
    row.thetas = r.thetas;
    row.phis = r.phis;
    row.pulse_area = r.pulse_area;
    row.infidelity_coeff = r.infidelity_coeff;
    *out = to_c(row);
    return NB_OK;
  });
}

nb_status nb_reproduce_row(size_t index, nb_table_row *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    const auto table = reference_table();
    if (index >= table.size())
      return fail(NB_RANGE_ERROR, "row index out of range");
    *out = to_c(reproduce(table[index].subfamily, table[index].net_rotation()));
    return NB_OK;
  });
}

nb_status nb_verify_row(size_t index, nb_verify_report *out) {
  return guard([&] {
    NB_REQUIRE(out, "output pointer is null");
    if (index >= reference_table().size())
      return fail(NB_RANGE_ERROR, "row index out of range");
    const RowReport r = verify_row(index);
    *out = nb_verify_report{};
    out->index = r.index;
    out->pass = r.pass ? 1 : 0;
    out->max_delta = r.max_delta;
    copy_truncated(out->worst_field, sizeof out->worst_field, r.worst_field);
    copy_truncated(out->message, sizeof out->message, r.error);
    return NB_OK;
  });
}

nb_status nb_inversion(const nb_sequence *seq, double eps,
                       double detection_fidelity, double *out) {
  return guard([&] {
    NB_REQUIRE(seq && out, "null pointer argument");
    *out = inversion(seq->seq, eps, DetectionModel{detection_fidelity});
    return NB_OK;
  });
}

nb_status nb_beam_epsilon(const nb_beam *beam, double x_um, double *out) {
  return guard([&] {
    NB_REQUIRE(beam && out, "null pointer argument");
    *out = beam_epsilon(BeamModel{beam->waist_radius_um, beam->center_um}, x_um);
    return NB_OK;
  });
}

nb_status nb_epsilon_sweep(const nb_sequence *const *seqs, size_t count,
                           double lo, double hi, int points,
                           double detection_fidelity, nb_sweep **out) {
  return guard([&] {
    SweepSpec spec;
    spec.kind = SweepKind::epsilon;
    spec.lo = lo;
    spec.hi = hi;
    spec.points = points;
    spec.detection.fidelity = detection_fidelity;
    return sweep(seqs, count, std::move(spec), out);
  });
}

nb_status nb_position_sweep(const nb_sequence *const *seqs, size_t count,
                            const nb_beam *beam, double lo_um, double hi_um,
                            int points, double detection_fidelity,
                            nb_sweep **out) {
  return guard([&] {
    NB_REQUIRE(beam, "beam is null");
    SweepSpec spec;
    spec.kind = SweepKind::position;
    spec.lo = lo_um;
    spec.hi = hi_um;
    spec.points = points;
    spec.detection.fidelity = detection_fidelity;
    spec.beam = BeamModel{beam->waist_radius_um, beam->center_um};
    return sweep(seqs, count, std::move(spec), out);
  });
}

void nb_sweep_destroy(nb_sweep *sweep) { delete sweep; }

size_t nb_sweep_rows(const nb_sweep *sweep) {
  return sweep ? sweep->table.grid.size() : 0;
}

size_t nb_sweep_columns(const nb_sweep *sweep) {
  return sweep ? sweep->table.columns.size() : 0;
}

const char *nb_sweep_abscissa(const nb_sweep *sweep) {
  return sweep ? sweep->table.abscissa.c_str() : "";
}

const char *nb_sweep_column_name(const nb_sweep *sweep, size_t column) {
  if (!sweep || column >= sweep->table.columns.size()) return nullptr;
  return sweep->table.columns[column].c_str();
}

nb_status nb_sweep_grid(const nb_sweep *sweep, size_t row, double *out) {
  return guard([&] {
    NB_REQUIRE(sweep && out, "null pointer argument");
    if (row >= sweep->table.grid.size())
      return fail(NB_RANGE_ERROR, "row index out of range");
    *out = sweep->table.grid[row];
    return NB_OK;
  });
}

nb_status nb_sweep_value(const nb_sweep *sweep, size_t column, size_t row,
                         double *out) {
  return guard([&] {
    NB_REQUIRE(sweep && out, "null pointer argument");
    if (column >= sweep->table.columns.size() ||
        row >= sweep->table.grid.size())
      return fail(NB_RANGE_ERROR, "sweep index out of range");
    *out = sweep->table.values[column][row];
    return NB_OK;
  });
}

nb_status nb_sweep_half_maximum_width(const nb_sweep *sweep, size_t column,
                                      double *out) {
  return guard([&] {
    NB_REQUIRE(sweep && out, "null pointer argument");
    if (column >= sweep->table.columns.size())
      return fail(NB_RANGE_ERROR, "column index out of range");
    *out = half_maximum_width(sweep->table.grid, sweep->table.values[column]);
    return NB_OK;
  });
}

}  // extern "C"
