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

#include "quditib/serialization.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "quditib/errors.hpp"

namespace quditib {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

// --- Channels ---------------------------------------------------------------

Json kraus_to_json(const KrausSet& kraus) {
  Json ops = Json::array();
  for (const auto& a : kraus.operators()) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  return Json{{"format", "quditib-channel"}, {"dimension", kraus.dimension()}, {"kraus", ops}};
}

KrausSet kraus_from_json(const Json& j) {
  try {
    const int d = j.at("dimension").get<int>();
    if (d < 2) throw SchemaError("channel: dimension must be >= 2");
    std::vector<CMatrix> ops;
    for (const auto& op : j.at("kraus")) {
      if (!op.is_array() || op.size() != static_cast<std::size_t>(d)) {
        throw SchemaError("channel: each Kraus operator needs " + std::to_string(d) + " rows");
      }
      CMatrix a(d, d);
      for (int r = 0; r < d; ++r) {
        const auto& row = op[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
          throw SchemaError("channel: row " + std::to_string(r) + " has the wrong length");
        }
        for (int c = 0; c < d; ++c) {
          const auto& z = row[static_cast<std::size_t>(c)];
          if (!z.is_array() || z.size() != 2) {
            throw SchemaError("channel: entries must be [re, im] pairs");
          }
          a(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
      }
      ops.push_back(std::move(a));
    }
    if (ops.empty()) throw SchemaError("channel: no Kraus operators");
    return KrausSet(std::move(ops));
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("channel: ") + e.what());
  }
}

void write_channel(const std::string& path, const KrausSet& kraus) {
  write_text_file(path, kraus_to_json(kraus).dump(2) + "\n");
}

KrausSet read_channel(const std::string& path) { return kraus_from_json(read_json_file(path)); }

Json noise_to_json(const NoiseAssignment& noise) {
  if (!noise.kraus_t || !noise.kraus_c) {
    throw SchemaError("noise fixture needs Kraus forms of both channels");
  }
  return Json{{"lambda_t", kraus_to_json(*noise.kraus_t)},
              {"lambda_c", kraus_to_json(*noise.kraus_c)}};
}

NoiseAssignment noise_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda_t") || !j.contains("lambda_c")) {
    throw SchemaError("noise fixture needs 'lambda_t' and 'lambda_c'");
  }
  auto t = kraus_from_json(j.at("lambda_t"));
  auto c = kraus_from_json(j.at("lambda_c"));
  if (t.dimension() != c.dimension()) throw SchemaError("noise fixture channels differ in dimension");
  return NoiseAssignment::from_kraus(t, c);
}

void write_noise_fixture(const std::string& path, const NoiseAssignment& noise) {
  write_text_file(path, noise_to_json(noise).dump(2) + "\n");
}

NoiseAssignment read_noise_fixture(const std::string& path) {
  return noise_from_json(read_json_file(path));
}

// --- Reports ----------------------------------------------------------------

namespace {

Json matrix_rows(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Residue>(row.begin(), row.end()));
  }
  return rows;
}

}  // namespace

Json build_report_to_json(const BuildReport& r) {
  Json tab = Json::array();
  for (const auto& g : r.tabulated) {
    tab.push_back({{"exponents", g.exponents.exponents()},
                   {"stated_ring", g.stated_ring},
                   {"additive_order", g.additive_order},
                   {"in_lattice", g.in_lattice},
                   {"normalizes_pauli", g.normalizes_pauli}});
  }
  return Json{
      {"dimension", r.dimension},
      {"root_order", r.root_order},
      {"group_order", r.group_order},
      {"interleaving_power", r.interleaving_power},
      {"t_in_group", r.t_in_group},
      {"lattice",
       {{"order", r.lattice_order},
        {"basis", matrix_rows(r.lattice_basis)},
        {"exponent_rings", r.exponent_rings}}},
      {"cprime", {{"order", r.cprime_order}, {"basis", matrix_rows(r.cprime_basis)}}},
      {"normalizing_sublattice",
       {{"order", r.normalizing_order}, {"basis", matrix_rows(r.normalizing_basis)}}},
      {"validation",
       {{"closure_trials", r.closure_trials},
        {"closure_ok", r.closure_ok},
        {"lattice_elements_normalizing_pauli", r.lattice_normalizing_count},
        {"permutations_normalizing_pauli", r.normalizing_permutations}}},
      {"tabulated_generators", {{"span_order", r.tabulated_span_order}, {"generators", tab}}},
      {"notes", r.notes}};
}

Json spectrum_to_json(const TwirlSpectrum& s, int d) {
  return Json{{"dimension", d},
              {"eta0", s.eta0},
              {"eta_plus", s.eta_plus},
              {"block_residuals", s.block_residuals},
              {"offblock_residual", s.offblock_residual},
              {"average_gate_fidelity", agf_from_etas(s, d)}};
}

// --- Config -----------------------------------------------------------------

Json config_to_json(const ExperimentConfig& c) {
  Json fids = Json::array();
  for (auto f : c.fiducials) fids.push_back(to_string(f));
  Json j{{"dimension", c.dimension},
         {"reference_fidelity", c.reference_fidelity},
         {"t_fidelity", c.t_fidelity},
         {"noise", to_string(c.noise)}};
  if (c.noise == NoiseMode::kFixture) j["noise_fixture"] = c.noise_fixture;
  if (c.kraus_rank > 0) j["kraus_rank"] = c.kraus_rank;
  j["lengths"] = c.lengths;
  j["sequences_per_length"] = c.sequences_per_length;
  if (c.shots) {
    j["shots"] = *c.shots;
  } else {
    j["shots"] = "exact";
  }
  j["seed"] = c.seed;
  j["fiducials"] = fids;
  return j;
}

namespace {

template <typename T>
T field(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw SchemaError("field '" + key + "': missing or of the wrong type");
  }
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  static const std::set<std::string> known{
      "dimension", "reference_fidelity", "t_fidelity", "noise", "noise_fixture", "kraus_rank",
      "lengths",   "sequences_per_length", "shots",    "seed",  "fiducials"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw SchemaError("field '" + key + "': unknown key");
  }
  ExperimentConfig c;
  if (j.contains("dimension")) c.dimension = field<int>(j, "dimension");
  if (j.contains("reference_fidelity")) c.reference_fidelity = field<double>(j, "reference_fidelity");
  if (j.contains("t_fidelity")) c.t_fidelity = field<double>(j, "t_fidelity");
  if (j.contains("noise")) c.noise = parse_noise_mode(field<std::string>(j, "noise"));
  if (j.contains("noise_fixture")) c.noise_fixture = field<std::string>(j, "noise_fixture");
  if (j.contains("kraus_rank")) c.kraus_rank = field<int>(j, "kraus_rank");
  if (j.contains("lengths")) c.lengths = field<std::vector<int>>(j, "lengths");
  if (j.contains("sequences_per_length")) {
    c.sequences_per_length = field<int>(j, "sequences_per_length");
  }
  if (j.contains("shots")) {
    const auto& s = j.at("shots");
    if (s.is_string() && s.get<std::string>() == "exact") {
      c.shots.reset();
    } else if (s.is_number_unsigned()) {
      c.shots = s.get<std::uint64_t>();
    } else {
      throw SchemaError("field 'shots': expected a positive integer or \"exact\"");
    }
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw SchemaError("field 'seed': expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("fiducials")) {
    c.fiducials.clear();
    for (const auto& f : field<std::vector<std::string>>(j, "fiducials")) {
      try {
        c.fiducials.push_back(parse_fiducial(f));
      } catch (const SchemaError& e) {
        throw SchemaError(std::string("field 'fiducials': ") + e.what());
      }
    }
  }
  c.validate();
  return c;
}

ExperimentConfig read_config(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    auto c = config_from_json(j);
    if (c.noise == NoiseMode::kFixture && !c.noise_fixture.empty() && c.noise_fixture[0] != '/') {
      // Fixture paths are relative to the config file.
      const auto slash = path.find_last_of('/');
      if (slash != std::string::npos) c.noise_fixture = path.substr(0, slash + 1) + c.noise_fixture;
    }
    return c;
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// --- Decay CSV --------------------------------------------------------------

std::vector<DecayCsvRow> decay_rows(const ExperimentResult& result) {
  std::vector<DecayCsvRow> rows;
  rows.reserve(result.sequences.size());
  for (const auto& s : result.sequences) {
    rows.push_back({result.config.dimension, s.fiducial, s.m, s.sequence_index, s.survival,
                    s.shots, result.config.seed});
  }
  return rows;
}

void write_decay_csv(std::ostream& out, const std::vector<DecayCsvRow>& rows) {
  out << kDecayCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.dimension << ',' << to_string(r.fiducial) << ',' << r.m << ',' << r.sequence_index
        << ',' << format_double(r.survival) << ',' << r.shots << ',' << r.seed << '\n';
  }
}

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& column, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw SchemaError("line " + std::to_string(line) + ": column '" + column +
                      "' has invalid value '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<DecayCsvRow> read_decay_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("decay CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kDecayCsvHeader) {
    throw SchemaError("line 1: header must be '" + std::string(kDecayCsvHeader) + "'");
  }
  std::vector<DecayCsvRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw SchemaError("line " + std::to_string(lineno) + ": expected 7 columns, got " +
                        std::to_string(cells.size()));
    }
    DecayCsvRow r;
    r.dimension = parse_number<int>(cells[0], "dimension", lineno);
    try {
      r.fiducial = parse_fiducial(cells[1]);
    } catch (const SchemaError& e) {
      throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
    }
    r.m = parse_number<int>(cells[2], "m", lineno);
    r.sequence_index = parse_number<int>(cells[3], "sequence_index", lineno);
    r.survival = parse_number<double>(cells[4], "survival", lineno);
    r.shots = parse_number<std::uint64_t>(cells[5], "shots", lineno);
    r.seed = parse_number<std::uint64_t>(cells[6], "seed", lineno);
    rows.push_back(r);
  }
  if (rows.empty()) throw SchemaError("decay CSV has a header but no data rows");
  return rows;
}

}  // namespace quditib
