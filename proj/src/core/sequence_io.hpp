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

#ifndef NARROWBAND_CORE_SEQUENCE_IO_HPP
#define NARROWBAND_CORE_SEQUENCE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "pulse_sequence.hpp"

namespace narrowband {

enum class SequenceFormat { json, csv };

/// Shortest "%.{digits}g"-style rendering, independent of the C locale.
/// Negative zero prints as "0".
std::string format_number(double value, int significant_digits);

inline constexpr int kSequenceDigits = 15;

std::string to_json(const PulseSequence &seq);
std::string to_csv(const PulseSequence &seq);
PulseSequence sequence_from_json(std::string_view text);
PulseSequence sequence_from_csv(std::string_view text);

std::string serialize(const PulseSequence &seq, SequenceFormat format);
PulseSequence deserialize(std::string_view text, SequenceFormat format);

/// Format chosen by extension: ".csv" is CSV, anything else JSON.
SequenceFormat format_for_path(const std::filesystem::path &path);

void write_sequence(const std::filesystem::path &path,
                    const PulseSequence &seq, SequenceFormat format);
PulseSequence read_sequence(const std::filesystem::path &path);

}  // namespace narrowband

#endif  // NARROWBAND_CORE_SEQUENCE_IO_HPP
