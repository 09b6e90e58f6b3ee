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

// narrowband: command-line front end over the C library interface.

#include <narrowband/narrowband.h>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;

constexpr int kCsvDigits = 9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Raised from command handlers; carries the process exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

int exit_code_for(nb_status s) {
  switch (s) {
    case NB_IO_ERROR:
    case NB_PARSE_ERROR:
      return kExitUsage;
    case NB_INTERNAL_ERROR:
    case NB_BUFFER_TOO_SMALL:
      return kExitVerifyFailed;
    default:
      return kExitInfeasible;
  }
}

void check(nb_status s, const std::string &what) {
  if (s == NB_OK) return;
  std::string msg = what + ": " + nb_status_string(s);
  if (const char *detail = nb_last_error_message(); detail && *detail)
    msg += " (" + std::string(detail) + ")";
  throw CommandError{exit_code_for(s), msg};
}

struct SequenceDeleter {
  void operator()(nb_sequence *s) const { nb_sequence_destroy(s); }
};
struct SweepDeleter {
  void operator()(nb_sweep *s) const { nb_sweep_destroy(s); }
};
using Sequence = std::unique_ptr<nb_sequence, SequenceDeleter>;
using Sweep = std::unique_ptr<nb_sweep, SweepDeleter>;

// Locale-independent shortest general form with the given precision.
std::string fmt(double v, int digits = kCsvDigits) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                         std::chars_format::general, digits);
  return std::string(buf.data(), r.ptr);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes to `path`, or stdout when the path is empty.
void emit(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw CommandError{kExitUsage, "cannot write " + path};
}

void write_sidecar(const std::string &path, nlohmann::ordered_json meta) {
  if (path.empty()) return;
  meta["generated_at"] = utc_timestamp();
  meta["library_version"] = nb_version();
  emit(path + ".meta.json", meta.dump(2) + "\n");
}

nlohmann::ordered_json describe(const nb_sequence *seq) {
  nlohmann::ordered_json pulses = nlohmann::ordered_json::array();
  for (size_t i = 0; i < nb_sequence_length(seq); ++i) {
    double theta = 0.0, phi = 0.0;
    check(nb_sequence_pulse(seq, i, &theta, &phi), "pulse");
    pulses.push_back({{"theta", theta}, {"phi", phi}});
  }
  return {{"name", nb_sequence_name(seq)}, {"pulses", pulses}};
}

double to_radians(double v, bool degrees) {
  return degrees ? v * std::numbers::pi / 180.0 : v;
}

void require_angle(double theta) {
  if (!(theta > 0.0 && theta <= kTwoPi + 1e-12))
    throw CommandError{kExitInfeasible,
                       "target angle must lie in (0, 2pi], got " + fmt(theta)};
}

Sequence optimized_task1(double theta, double phi, nb_objective objective) {
  nb_optimization_result r{};
  check(nb_optimize(objective, theta, phi, &r), "optimization");
  nb_sequence *raw = nullptr;
  check(nb_task1(&r.params, &raw), "TASK1 synthesis");
  return Sequence(raw);
}

Sequence simple_pulse(double theta, double phi) {
  nb_sequence *raw = nullptr;
  check(nb_sequence_create("simple", &raw), "sequence");
  Sequence seq(raw);
  check(nb_sequence_append(seq.get(), theta, phi), "pulse");
  check(nb_sequence_set_target(seq.get(), theta, phi), "target");
  return seq;
}

// simple, sk1, task1_tmin, task1_emin at the given target.
std::vector<Sequence> comparison_set(double theta) {
  std::vector<Sequence> out;
  out.push_back(simple_pulse(theta, 0.0));
  nb_sequence *raw = nullptr;
  check(nb_sk1(theta, 0.0, &raw), "SK1 synthesis");
  out.emplace_back(raw);
  out.push_back(optimized_task1(theta, 0.0, NB_OBJECTIVE_AREA));
  check(nb_sequence_set_name(out.back().get(), "task1_tmin"), "name");
  out.push_back(optimized_task1(theta, 0.0, NB_OBJECTIVE_INFIDELITY));
  check(nb_sequence_set_name(out.back().get(), "task1_emin"), "name");
  return out;
}

std::string sweep_csv(const nb_sweep *sweep) {
  std::ostringstream os;
  os << nb_sweep_abscissa(sweep);
  const size_t cols = nb_sweep_columns(sweep);
  for (size_t c = 0; c < cols; ++c) os << ',' << nb_sweep_column_name(sweep, c);
  os << '\n';
  for (size_t r = 0; r < nb_sweep_rows(sweep); ++r) {
    double x = 0.0;
    check(nb_sweep_grid(sweep, r, &x), "sweep grid");
    os << fmt(x);
    for (size_t c = 0; c < cols; ++c) {
      double v = 0.0;
      check(nb_sweep_value(sweep, c, r, &v), "sweep value");
      os << ',' << fmt(v);
    }
    os << '\n';
  }
  return os.str();
}

const char *subfamily_name(nb_subfamily s) {
  return s == NB_SUBFAMILY_T_MIN ? "T_min" : "E_min";
}

// --- commands ------------------------------------------------------------

struct SynthOptions {
  double angle = 0.0;
  double azimuth = 0.0;
  std::string objective = "area";
  std::string family = "task1";
  std::string out;
  std::string format;
  bool degrees = false;
};

int run_synth(const SynthOptions &o) {
  const double theta = to_radians(o.angle, o.degrees);
  const double phi = to_radians(o.azimuth, o.degrees);
  require_angle(theta);

  Sequence seq;
  if (o.family == "sk1") {
    nb_sequence *raw = nullptr;
    check(nb_sk1(theta, phi, &raw), "SK1 synthesis");
    seq.reset(raw);
  } else {
    seq = optimized_task1(theta, phi,
                          o.objective == "infidelity" ? NB_OBJECTIVE_INFIDELITY
                                                      : NB_OBJECTIVE_AREA);
  }

  double area = 0.0, coeff = 0.0;
  check(nb_sequence_total_area(seq.get(), &area), "pulse area");
  check(nb_sequence_infidelity_coefficient(seq.get(), &coeff), "coefficient");

  nb_format format = NB_FORMAT_JSON;
  if (o.format == "csv" ||
      (o.format.empty() && o.out.size() >= 4 &&
       o.out.compare(o.out.size() - 4, 4, ".csv") == 0))
    format = NB_FORMAT_CSV;

  std::ostream &report = o.out.empty() ? std::cerr : std::cout;
  if (o.out.empty()) {
    size_t needed = 0;
    nb_sequence_serialize(seq.get(), format, nullptr, 0, &needed);
    std::string text(needed, '\0');
    check(nb_sequence_serialize(seq.get(), format, text.data(), needed,
                                &needed),
          "serialization");
    text.resize(needed - 1);
    std::cout << text;
  } else {
    check(nb_sequence_write(seq.get(), o.out.c_str(), format), "write");
  }
  report << "pulses: " << nb_sequence_length(seq.get()) << '\n'
         << "pulse_area: " << fmt(area) << '\n'
         << "infidelity_coeff: " << fmt(coeff) << '\n';
  return kExitOk;
}

int run_table(const std::string &out) {
  std::ostringstream os;
  os << "subfamily,net_rotation,lambda_x,lambda_y";
  for (int i = 1; i <= 5; ++i) os << ",theta_" << i;
  for (int i = 1; i <= 5; ++i) os << ",phi_" << i;
  os << ",pulse_area,infidelity_coeff\n";
  for (size_t i = 0; i < nb_reference_row_count(); ++i) {
    nb_table_row row{};
    check(nb_reproduce_row(i, &row), "row " + std::to_string(i));
    os << subfamily_name(row.subfamily) << ',' << fmt(row.net_rotation) << ','
       << fmt(row.lambda_x) << ',' << fmt(row.lambda_y);
    for (double t : row.thetas) os << ',' << fmt(t);
    for (double p : row.phis) os << ',' << fmt(p);
    os << ',' << fmt(row.pulse_area) << ',' << fmt(row.infidelity_coeff)
       << '\n';
  }
  emit(out, os.str());
  write_sidecar(out, {{"command", "table"},
                      {"rows", nb_reference_row_count()},
                      {"azimuth", 0.0}});
  return kExitOk;
}

struct SweepOptions {
  double angle = std::numbers::pi;
  int points = 101;
  double detection = 1.0;
  double waist_radius = 22.1;
  double span = 150.0;
  std::string out;
  bool degrees = false;
};

int run_sweep(const SweepOptions &o, bool position) {
  const double theta = to_radians(o.angle, o.degrees);
  require_angle(theta);
  const std::vector<Sequence> seqs = comparison_set(theta);
  std::vector<const nb_sequence *> handles;
  for (const auto &s : seqs) handles.push_back(s.get());

  nb_sweep *raw = nullptr;
  nlohmann::ordered_json meta;
  const nb_beam beam{o.waist_radius, 0.0};
  if (position) {
    check(nb_position_sweep(handles.data(), handles.size(), &beam,
                            -o.span / 2.0, o.span / 2.0, o.points, o.detection,
                            &raw),
          "position sweep");
    meta["command"] = "sweep-position";
  } else {
    check(nb_epsilon_sweep(handles.data(), handles.size(), 0.0, 1.0, o.points,
                           o.detection, &raw),
          "epsilon sweep");
    meta["command"] = "sweep-epsilon";
  }
  Sweep sweep(raw);
  emit(o.out, sweep_csv(sweep.get()));

  meta["target"] = {{"theta", theta}, {"phi", 0.0}};
  meta["points"] = o.points;
  meta["detection"] = {{"fidelity", o.detection}};
  if (position) {
    meta["beam"] = {{"waist_radius_um", o.waist_radius},
                    {"center_um", 0.0},
                    {"waist_interpretation", "1/e^2 intensity radius"},
                    {"epsilon_model", "exp(-(x-center)^2/w^2)"}};
    meta["span_um"] = o.span;
  }
  nlohmann::ordered_json provenance = nlohmann::ordered_json::array();
  for (const auto &s : seqs) provenance.push_back(describe(s.get()));
  meta["sequences"] = provenance;
  write_sidecar(o.out, meta);
  return kExitOk;
}

int run_contours(int n, const std::string &out) {
  size_t count = 0;
  nb_contour_grid(n, nullptr, 0, &count);
  std::vector<nb_contour_point> pts(count);
  check(nb_contour_grid(n, pts.data(), pts.size(), &count), "contour grid");
  std::ostringstream os;
  os << "lambda_x,lambda_y,net_angle,pulse_area,infidelity_coeff\n";
  for (const auto &p : pts)
    os << fmt(p.lambda_x) << ',' << fmt(p.lambda_y) << ',' << fmt(p.net_angle)
       << ',' << fmt(p.pulse_area) << ',' << fmt(p.infidelity_coeff) << '\n';
  emit(out, os.str());
  write_sidecar(out, {{"command", "contours"}, {"n", n}, {"azimuth", 0.0}});
  return kExitOk;
}

int run_verify() {
  const auto start = std::chrono::steady_clock::now();
  size_t passed = 0;
  const size_t total = nb_reference_row_count();
  for (size_t i = 0; i < total; ++i) {
    nb_table_row printed{};
    nb_verify_report rep{};
    check(nb_reference_row(i, &printed), "reference row");
    check(nb_verify_row(i, &rep), "verify row");
    if (rep.pass) ++passed;
    std::cout << "row " << (i + 1 < 10 ? " " : "") << i + 1 << "  "
              << subfamily_name(printed.subfamily) << "  "
              << fmt(printed.net_rotation / std::numbers::pi * 4.0, 3)
              << "pi/4  " << (rep.pass ? "PASS" : "FAIL")
              << "  max_delta=" << fmt(rep.max_delta, 3);
    if (rep.worst_field[0]) std::cout << " (" << rep.worst_field << ')';
    if (rep.message[0]) std::cout << "  error: " << rep.message;
    std::cout << '\n';
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << passed << '/' << total << " rows pass (" << fmt(secs, 3)
            << " s)\n";
  return passed == total ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Narrowband composite pulse synthesis and simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nb_version());

  SynthOptions synth;
  auto *synth_cmd =
      app.add_subcommand("synth", "Synthesize a sequence for a target gate");
  synth_cmd->add_option("--angle", synth.angle, "Target rotation angle")
      ->required();
  synth_cmd->add_option("--azimuth", synth.azimuth, "Target axis azimuth");
  synth_cmd->add_option("--objective", synth.objective, "TASK1 objective")
      ->check(CLI::IsMember({"area", "infidelity"}));
  synth_cmd->add_option("--family", synth.family, "Sequence family")
      ->check(CLI::IsMember({"sk1", "task1"}));
  synth_cmd->add_option("--out", synth.out, "Output path (stdout if absent)");
  synth_cmd->add_option("--format", synth.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  synth_cmd->add_flag("--degrees", synth.degrees, "Angles given in degrees");

  std::string table_out;
  auto *table_cmd =
      app.add_subcommand("table", "Recompute the optimized TASK1 table");
  table_cmd->add_option("--out", table_out, "Output CSV path");

  SweepOptions eps;
  auto *eps_cmd = app.add_subcommand(
      "sweep-epsilon", "Inversion versus relative drive strength");
  SweepOptions pos;
  auto *pos_cmd = app.add_subcommand("sweep-position",
                                     "Inversion versus ion position in a beam");
  for (auto [cmd, o] : {std::pair{eps_cmd, &eps}, std::pair{pos_cmd, &pos}}) {
    cmd->add_option("--angle", o->angle, "Target rotation angle")
        ->capture_default_str();
    cmd->add_option("--points", o->points, "Grid points")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    cmd->add_option("--detection", o->detection, "Detection fidelity")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--out", o->out, "Output CSV path");
    cmd->add_flag("--degrees", o->degrees, "Angle given in degrees");
  }
  pos_cmd->add_option("--waist-radius", pos.waist_radius, "Beam radius (um)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pos_cmd->add_option("--span", pos.span, "Total x range (um)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int grid_n = 51;
  std::string contours_out;
  auto *contours_cmd = app.add_subcommand(
      "contours", "Net angle, area and coefficient over the dilation plane");
  contours_cmd->add_option("--n", grid_n, "Grid size per axis")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  contours_cmd->add_option("--out", contours_out, "Output CSV path");

  auto *verify_cmd = app.add_subcommand(
      "verify", "Check the optimizer against the embedded reference table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth_cmd) return run_synth(synth);
    if (*table_cmd) return run_table(table_out);
    if (*eps_cmd) return run_sweep(eps, false);
    if (*pos_cmd) return run_sweep(pos, true);
    if (*contours_cmd) return run_contours(grid_n, contours_out);
    if (*verify_cmd) return run_verify();
  } catch (const CommandError &e) {
    std::cerr << "narrowband: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
