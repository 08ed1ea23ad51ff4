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

#include "quditib/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "quditib/analysis.hpp"
#include "quditib/clifford_like.hpp"
#include "quditib/errors.hpp"
#include "quditib/protocol.hpp"
#include "quditib/serialization.hpp"
#include "quditib/twirl.hpp"

namespace quditib {

namespace {

class UsageError : public Error {
  using Error::Error;
};

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!path.empty()) write_text_file(path, text);
  out << text;
}

int cmd_build_group(int d, const std::string& out_path, std::ostream& out) {
  const auto group = CliffordLikeGroup::build(d);
  emit(build_report_to_json(group.report()), out_path, out);
  return kExitOk;
}

int cmd_twirl(int d, const std::string& noise_spec, double tolerance, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const auto kraus = parse_noise_spec(noise_spec, d);
  const auto noise = superop_from_kraus(kraus);
  const auto group = CliffordLikeGroup::build(d);
  const auto twirled = exact_twirl(noise, group);
  const auto spectrum = measure_block_spectrum(twirled);
  Json j = spectrum_to_json(spectrum, d);
  j["noise"] = noise_spec;
  j["noise_average_gate_fidelity"] = average_gate_fidelity(noise);
  if (spectrum.max_residual() > tolerance) {
    err << "structure violation: block residual " << spectrum.max_residual() << " exceeds "
        << tolerance << "\n";
    err << j.dump(2) << "\n";
    return kExitIntegrity;
  }
  emit(j, out_path, out);
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, std::string out_dir, std::ostream& out) {
  const auto started = utc_now();
  const auto config = read_config(config_path);
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutputDirEnv);
    out_dir = env && *env ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

  const auto group = CliffordLikeGroup::build(config.dimension);
  const auto noise = generate_noise(config);
  const auto result = run_experiment(config, group, noise);

  const auto csv_path = (std::filesystem::path(out_dir) / "decay.csv").string();
  const auto noise_path = (std::filesystem::path(out_dir) / "noise.json").string();
  const auto manifest_path = (std::filesystem::path(out_dir) / "manifest.json").string();
  std::ostringstream csv;
  write_decay_csv(csv, decay_rows(result));
  write_text_file(csv_path, csv.str());
  write_noise_fixture(noise_path, noise);

  Json manifest{
      {"tool", "qudit-ib"},
      {"version", QUDITIB_VERSION},
      {"config_file", config_path},
      {"config", config_to_json(config)},
      {"seed", config.seed},
      {"started_at", started},
      {"finished_at", utc_now()},
      {"noise",
       {{"reference_fidelity", average_gate_fidelity(noise.lambda_c)},
        {"t_fidelity", average_gate_fidelity(noise.lambda_t)},
        {"composite_fidelity", average_gate_fidelity(noise.lambda_t * noise.lambda_c)}}},
      {"outputs", {{"decay_csv", csv_path}, {"noise_fixture", noise_path}}}};
  write_text_file(manifest_path, manifest.dump(2) + "\n");
  out << "wrote " << result.sequences.size() << " sequences to " << csv_path << "\n";
  out << "manifest: " << manifest_path << "\n";
  return kExitOk;
}

Json fit_to_json(const FitResult& f) {
  return Json{{"a", f.a},
              {"b", f.b},
              {"eta", f.eta},
              {"eta_stderr", std::isfinite(f.eta_stderr) ? Json(f.eta_stderr) : Json(nullptr)},
              {"residual", f.residual},
              {"degenerate", f.degenerate},
              {"grid_nodes", f.grid_nodes},
              {"iterations", f.iterations}};
}

int cmd_fit(const std::string& data_path, double reference, std::optional<double> truth,
            Weighting weighting, const std::string& out_path, std::ostream& out) {
  std::ifstream in(data_path);
  if (!in) throw IoError("cannot open '" + data_path + "'");
  const auto rows = read_decay_csv(in);

  const int d = rows.front().dimension;
  std::map<Fiducial, std::pair<std::vector<int>, std::vector<double>>> series;
  std::map<Fiducial, std::uint64_t> shots;
  for (const auto& r : rows) {
    if (r.dimension != d) throw SchemaError("rows mix dimensions " + std::to_string(d) + " and " +
                                            std::to_string(r.dimension));
    series[r.fiducial].first.push_back(r.m);
    series[r.fiducial].second.push_back(r.survival);
    shots[r.fiducial] = r.shots;
  }
  for (auto f : {Fiducial::kZero, Fiducial::kPlus}) {
    if (!series.contains(f)) {
      throw SchemaError("decay data has no series for fiducial '" + to_string(f) + "'");
    }
  }

  FitOptions options;
  options.weighting = weighting;
  std::map<Fiducial, FitResult> fits;
  for (const auto& [f, data] : series) {
    fits[f] = fit_decay(aggregate_decay(f, data.first, data.second, shots[f]), options);
  }
  const double composite = composite_agf(fits[Fiducial::kZero], fits[Fiducial::kPlus], d);
  const double ft = t_gate_fidelity(composite, reference, d);
  const double ft_direct = t_gate_fidelity_direct(composite, reference);

  Json report{{"dimension", d},
              {"fits", {{"0", fit_to_json(fits[Fiducial::kZero])},
                        {"+", fit_to_json(fits[Fiducial::kPlus])}}},
              {"composite_fidelity", composite},
              {"reference_fidelity", reference},
              {"t_fidelity", ft},
              {"t_fidelity_direct_ratio", ft_direct}};
  if (truth) {
    report["truth"] = *truth;
    report["relative_error"] = relative_error(ft, *truth);
    report["relative_error_direct_ratio"] = relative_error(ft_direct, *truth);
  }
  emit(report, out_path, out);
  return kExitOk;
}

}  // namespace

KrausSet parse_noise_spec(const std::string& spec, int d) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty()) throw UsageError("empty noise spec");

  const auto& kind = parts[0];
  if (kind == "identity" && parts.size() == 1) return identity_channel(d);
  if (kind == "depolarizing" && parts.size() == 2) {
    const double lambda = parse_real(parts[1], "depolarizing parameter");
    try {
      return depolarizing(d, lambda);
    } catch (const RangeError& e) {
      throw UsageError(e.what());
    }
  }
  if (kind == "random" && parts.size() == 3) {
    std::uint64_t seed = 0;
    const auto res = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), seed);
    if (res.ec != std::errc() || res.ptr != parts[1].data() + parts[1].size()) {
      throw UsageError("invalid seed '" + parts[1] + "'");
    }
    const double fidelity = parse_real(parts[2], "fidelity");
    if (!(fidelity > 0.0 && fidelity <= 1.0)) throw UsageError("fidelity must lie in (0, 1]");
    Rng rng(seed);
    try {
      return mix_to_target_fidelity(random_cptp(d, d * d, rng), fidelity);
    } catch (const RangeError& e) {
      throw UsageError(e.what());
    }
  }
  if (kind == "file" && parts.size() >= 2) {
    const auto path = spec.substr(5);
    auto kraus = read_channel(path);
    if (kraus.dimension() != d) throw SchemaError(path + ": channel dimension differs from --dim");
    return kraus;
  }
  throw UsageError("unrecognized noise spec '" + spec +
                   "' (identity | depolarizing:<lambda> | random:<seed>:<F> | file:<path>)");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qudit non-Clifford interleaved benchmarking", "qudit-ib"};
  app.require_subcommand(1);

  int dim = 3;
  std::string out_path;

  auto* build = app.add_subcommand("build-group", "Build the Clifford-like group and report it");
  build->add_option("--dim", dim, "Qudit dimension")->required()->check(CLI::IsMember({3, 4}));
  build->add_option("--out", out_path, "Also write the report to this file");

  std::string noise_spec;
  double tolerance = 1e-8;
  auto* twirl = app.add_subcommand("twirl", "Twirl a noise channel over the group");
  twirl->add_option("--dim", dim, "Qudit dimension")->required()->check(CLI::IsMember({3, 4}));
  twirl->add_option("--noise", noise_spec,
                    "identity | depolarizing:<lambda> | random:<seed>:<F> | file:<path>")
      ->required();
  twirl->add_option("--tolerance", tolerance, "Block residual tolerance");
  twirl->add_option("--out", out_path, "Also write the report to this file");

  std::string config_path, out_dir;
  auto* simulate = app.add_subcommand("simulate", "Run a simulated benchmarking experiment");
  simulate->add_option("--config", config_path, "Experiment config (JSON)")->required();
  simulate->add_option("--out-dir", out_dir,
                       std::string("Output directory (default $") + kOutputDirEnv + " or .)");

  std::string data_path;
  double reference = 0.0;
  std::optional<double> truth;
  std::string weighting_name = "equal";
  auto* fit = app.add_subcommand("fit", "Fit decay data and estimate the T-gate fidelity");
  fit->add_option("--data", data_path, "Decay CSV")->required();
  fit->add_option("--reference-fidelity", reference, "Known fidelity of the reference gates")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  fit->add_option("--truth", truth, "True T-gate fidelity, for the relative error");
  fit->add_option("--weighting", weighting_name, "equal | inverse-variance")
      ->check(CLI::IsMember({"equal", "inverse-variance"}));
  fit->add_option("--out", out_path, "Also write the report to this file");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build_group(dim, out_path, out);
    if (*twirl) return cmd_twirl(dim, noise_spec, tolerance, out_path, out, err);
    if (*simulate) return cmd_simulate(config_path, out_dir, out);
    if (*fit) {
      const auto w = weighting_name == "equal" ? Weighting::kEqual : Weighting::kInverseVariance;
      return cmd_fit(data_path, reference, truth, w, out_path, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedDimension& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CptpViolation& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  }
  return kExitUsage;
}

}  // namespace quditib
