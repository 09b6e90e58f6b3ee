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

#include "sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "error.hpp"

namespace narrowband {
namespace {

using nlohmann::json;

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::parse, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

double number_field(const json &obj, const char *key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::parse,
                std::string("sequence: missing numeric field '") + key + "'");
  }
  return it->get<double>();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                       std::chars_format::general,
                                       significant_digits);
  if (ec != std::errc()) {
    throw Error(ErrorCode::invalid_argument, "format_number failed");
  }
  return std::string(buf, ptr);
}

std::string to_json(const PulseSequence &seq) {
  auto num = [](double v) { return format_number(v, kSequenceDigits); };
  std::string out = "{\n  \"name\": " + json(seq.name()).dump() + ",\n";
  if (seq.target()) {
    out += "  \"target\": {\"theta\": " + num(seq.target()->theta) +
           ", \"phi\": " + num(seq.target()->phi) + "},\n";
  }
  out += "  \"pulses\": [";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"theta\": " + num(seq[i].theta()) +
           ", \"phi\": " + num(seq[i].phi()) + "}";
  }
  out += seq.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

PulseSequence sequence_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::parse, std::string("sequence: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::parse, "sequence: document is not an object");
  }
  PulseSequence seq;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorCode::parse, "sequence: bad name");
    seq.set_name(it->get<std::string>());
  }
  if (auto it = doc.find("target"); it != doc.end() && !it->is_null()) {
    seq.set_target(
        TargetGate{number_field(*it, "theta"), number_field(*it, "phi")});
  }
  const auto pulses = doc.find("pulses");
  if (pulses == doc.end() || !pulses->is_array()) {
    throw Error(ErrorCode::parse, "sequence: missing 'pulses' array");
  }
  for (const json &p : *pulses) {
    seq.append(Pulse(number_field(p, "theta"), number_field(p, "phi")));
  }
  return seq;
}

std::string to_csv(const PulseSequence &seq) {
  auto num = [](double v) { return format_number(v, kSequenceDigits); };
  std::string out = "# name: " + seq.name() + "\n";
  if (seq.target()) {
    out += "# target: " + num(seq.target()->theta) + " " +
           num(seq.target()->phi) + "\n";
  }
  out += "index,theta,phi\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out += std::to_string(i + 1) + "," + num(seq[i].theta()) + "," +
           num(seq[i].phi()) + "\n";
  }
  return out;
}

PulseSequence sequence_from_csv(std::string_view text) {
  PulseSequence seq;
  bool header_seen = false;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("# name: ")) {
      seq.set_name(std::string(line.substr(8)));
    } else if (line.starts_with("# target: ")) {
      const auto parts = split(line.substr(10), ' ');
      if (parts.size() != 2) throw Error(ErrorCode::parse, "csv: bad target");
      seq.set_target(TargetGate{parse_double(parts[0]), parse_double(parts[1])});
    } else if (line.starts_with("#")) {
      continue;
    } else if (!header_seen) {
      if (line != "index,theta,phi") {
        throw Error(ErrorCode::parse, "csv: expected header 'index,theta,phi'");
      }
      header_seen = true;
    } else {
      const auto cols = split(line, ',');
      if (cols.size() != 3) throw Error(ErrorCode::parse, "csv: bad pulse row");
      seq.append(Pulse(parse_double(cols[1]), parse_double(cols[2])));
    }
  }
  if (!header_seen) throw Error(ErrorCode::parse, "csv: no pulse table");
  return seq;
}

std::string serialize(const PulseSequence &seq, SequenceFormat format) {
  return format == SequenceFormat::csv ? to_csv(seq) : to_json(seq);
}

PulseSequence deserialize(std::string_view text, SequenceFormat format) {
  return format == SequenceFormat::csv ? sequence_from_csv(text)
                                       : sequence_from_json(text);
}

SequenceFormat format_for_path(const std::filesystem::path &path) {
  return path.extension() == ".csv" ? SequenceFormat::csv
                                    : SequenceFormat::json;
}

void write_sequence(const std::filesystem::path &path,
                    const PulseSequence &seq, SequenceFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string());
  out << serialize(seq, format);
  if (!out) throw Error(ErrorCode::io, "write failed: " + path.string());
}

PulseSequence read_sequence(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str(), format_for_path(path));
}

}  // namespace narrowband
