// Copyright 2026 The qudit-ib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// File formats: channels and noise fixtures, configs and reports (JSON), and
// the decay CSV consumed by the fitting command and by plotting scripts.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "quditib/clifford_like.hpp"
#include "quditib/protocol.hpp"
#include "quditib/twirl.hpp"

namespace quditib {

using Json = nlohmann::ordered_json;

/// {"format": "quditib-channel", "dimension": d, "kraus": [A_0, ...]} with each
/// operator a list of rows and each entry a [re, im] pair.
Json kraus_to_json(const KrausSet& kraus);
/// Throws SchemaError on malformed input and CptpViolation on a non-TP set.
KrausSet kraus_from_json(const Json& j);
void write_channel(const std::string& path, const KrausSet& kraus);
KrausSet read_channel(const std::string& path);

/// {"lambda_t": channel, "lambda_c": channel}; needs the Kraus forms.
Json noise_to_json(const NoiseAssignment& noise);
NoiseAssignment noise_from_json(const Json& j);
void write_noise_fixture(const std::string& path, const NoiseAssignment& noise);
NoiseAssignment read_noise_fixture(const std::string& path);

Json build_report_to_json(const BuildReport& report);
Json spectrum_to_json(const TwirlSpectrum& spectrum, int d);

Json config_to_json(const ExperimentConfig& config);
/// Parses and validates; SchemaError names the offending field.
ExperimentConfig config_from_json(const Json& j);
/// Throws IoError when the file cannot be read and SchemaError (with the
/// line and column for syntax errors) when it does not parse.
ExperimentConfig read_config(const std::string& path);

/// One line of the decay CSV.
struct DecayCsvRow {
  int dimension = 0;
  Fiducial fiducial = Fiducial::kZero;
  int m = 0;
  int sequence_index = 0;
  double survival = 0.0;
  std::uint64_t shots = 0;  // 0 for exact expectation values
  std::uint64_t seed = 0;
};

inline constexpr const char* kDecayCsvHeader =
    "dimension,fiducial,m,sequence_index,survival,shots,seed";

std::vector<DecayCsvRow> decay_rows(const ExperimentResult& result);
void write_decay_csv(std::ostream& out, const std::vector<DecayCsvRow>& rows);
/// Throws SchemaError with the offending line number.
std::vector<DecayCsvRow> read_decay_csv(std::istream& in);

/// Shortest decimal form that round-trips the double.
std::string format_double(double value);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace quditib
