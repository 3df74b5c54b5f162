// Copyright 2026 The ncdepth Authors
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

#include "ncdepth/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncdepth/gaussian_channels.hpp"
#include "ncdepth/gaussian_states.hpp"
#include "ncdepth/json_io.hpp"
#include "ncdepth/phase_space_oracle.hpp"

namespace ncdepth::cli {

using nlohmann::json;

namespace {

constexpr double kTable1Tol = 1e-9;

struct GlobalFlags {
  bool json = false;
  double tol = kPsdTol;
  std::string scheme = "pon";
};

// Twelve significant digits, always with a decimal point ("0.0", "0.75").
std::string fmt(double x) {
  if (std::isnan(x)) return "-";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 12);
  std::string s(buf.data(), end);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

json report_header(std::string_view command, const GlobalFlags& g) {
  return json{{"tool", "ncdepth"},
              {"version", std::string(kVersion)},
              {"command", std::string(command)},
              {"tolerances", {{"psd", g.tol}}}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const PhysicalityError& e) {
    err << "invalid input: " << e.what()
        << " (smallest eigenvalue " << fmt(e.min_eigenvalue()) << ")\n";
    return kPhysicsError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseError;
  }
}

void print_verdict(std::ostream& out, const ChannelVerdict& v) {
  auto flag = [](const std::optional<bool>& b) {
    return b ? (*b ? "true" : "false") : "-";
  };
  out << "cp             " << (v.cp ? "true" : "false") << '\n';
  out << "cp_min_eig     " << fmt(v.cp_min_eigenvalue) << '\n';
  out << "nb (pon)       " << flag(v.nb) << '\n';
  out << "qpn_classical  " << flag(v.qpn_classical) << '\n';
  out << "depth          "
      << (v.depth ? fmt(*v.depth) : std::string("-")) << '\n';
}

bool classical_under(const ChannelVerdict& v, const std::string& scheme) {
  return scheme == "qpn" ? v.qpn_classical.value_or(false) : v.nb.value_or(false);
}

std::optional<NoiseMatrix> load_noise(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return NoiseMatrix(io::read_matrix(io::load_json_file(path)));
}

void write_channel(const GaussianChannel& ch, const std::string& out_path,
                   std::ostream& out) {
  const std::string text = io::channel_json(ch).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw io::ParseError("cannot write '" + out_path + "'");
  file << text;
}

int cmd_state(const GlobalFlags& g, const std::string& path,
              const std::string& noise_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const GaussianState state = io::read_state(io::load_json_file(path));
    const std::optional<NoiseMatrix> noise = load_noise(noise_path);
    if (noise && noise->modes() != state.modes()) {
      err << "shape error: noise matrix has " << noise->modes()
          << " modes, state has " << state.modes() << '\n';
      return static_cast<int>(kShapeError);
    }
    const double depth = depth_state(state);
    const bool classical = is_classical(state, g.tol);
    const double lmin = jacobi_eigen(state.cov().mat()).values.minCoeff();
    std::optional<bool> renders;
    if (noise) renders = noise_renders_classical(state, *noise, g.tol);

    if (g.json) {
      json j = report_header("state", g);
      j["input"] = path;
      j["result"] = {{"modes", state.modes()},
                     {"depth", depth},
                     {"classical", classical},
                     {"min_eigenvalue", lmin}};
      if (noise) {
        j["noise_input"] = noise_path;
        j["result"]["noise_renders_classical"] = *renders;
      }
      emit_json(out, j);
    } else {
      out << "depth " << fmt(depth) << ", "
          << (classical ? "classical" : "nonclassical") << '\n';
      if (renders) {
        out << "noise renders classical: " << (*renders ? "true" : "false")
            << '\n';
      }
    }
    return static_cast<int>(kSuccess);
  });
}

int cmd_channel(const GlobalFlags& g, const std::string& path,
                const std::string& noise_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const GaussianChannel ch = io::read_channel(io::load_json_file(path));
    const std::optional<NoiseMatrix> noise = load_noise(noise_path);
    if (noise && noise->modes() != ch.modes()) {
      err << "shape error: noise matrix has " << noise->modes()
          << " modes, channel has " << ch.modes() << '\n';
      return static_cast<int>(kShapeError);
    }
    const ChannelVerdict v = classify(ch, g.tol);
    std::optional<bool> renders;
    if (v.cp && noise) renders = noise_renders_nb(ch, *noise, g.tol);
    const bool classical = classical_under(v, g.scheme);

    if (g.json) {
      json j = report_header("channel", g);
      j["input"] = path;
      j["scheme"] = g.scheme;
      j["verdict"] = io::verdict_json(v);
      if (v.cp) j["classical"] = classical;
      if (renders) {
        j["noise_input"] = noise_path;
        j["noise_renders_nb"] = *renders;
      }
      emit_json(out, j);
    } else {
      print_verdict(out, v);
      if (renders) {
        out << "noise renders nb: " << (*renders ? "true" : "false") << '\n';
      }
      if (v.cp) {
        out << "verdict        " << (classical ? "classical" : "nonclassical")
            << " (scheme " << g.scheme << ")\n";
      }
    }
    if (!v.cp) {
      err << "channel is not completely positive: smallest eigenvalue of "
             "V(X,Y) + i*Omega is "
          << fmt(v.cp_min_eigenvalue) << '\n';
      return static_cast<int>(kPhysicsError);
    }
    return static_cast<int>(classical ? kSuccess : kNonclassical);
  });
}

int analyze_and_print(const GlobalFlags& g, const GaussianChannel& ch,
                      std::ostream& out) {
  const ChannelVerdict v = classify(ch, g.tol);
  if (g.json) {
    json j = report_header("analyze", g);
    j["verdict"] = io::verdict_json(v);
    emit_json(out, j);
  } else {
    print_verdict(out, v);
  }
  return kSuccess;
}

int cmd_canonical(const GlobalFlags& g, const std::string& kind,
                  std::optional<double> kappa, const std::string& out_path,
                  bool analyze, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ChannelKind k = parse_channel_kind(kind);
    if (k != ChannelKind::kSingular && !kappa) {
      throw std::invalid_argument(std::string(to_string(k)) +
                                  " requires a kappa argument");
    }
    const GaussianChannel ch = canonical(k, kappa.value_or(0.0));
    write_channel(ch, out_path, out);
    if (analyze) analyze_and_print(g, ch, out);
    return static_cast<int>(kSuccess);
  });
}

int cmd_compose(const GlobalFlags& g, const std::string& path2,
                const std::string& path1, const std::string& out_path,
                bool analyze, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GaussianChannel ch2 = io::read_channel(io::load_json_file(path2));
    const GaussianChannel ch1 = io::read_channel(io::load_json_file(path1));
    if (ch1.modes() != ch2.modes()) {
      err << "shape error: '" << path2 << "' has " << ch2.modes()
          << " modes, '" << path1 << "' has " << ch1.modes() << '\n';
      return static_cast<int>(kShapeError);
    }
    const GaussianChannel composed = compose(ch2, ch1);
    write_channel(composed, out_path, out);
    if (analyze) analyze_and_print(g, composed, out);
    return static_cast<int>(kSuccess);
  });
}

int cmd_table1(const GlobalFlags& g, std::ostream& out) {
  const std::vector<Table1Row> rows = compute_table1();
  bool all_ok = true;
  json jrows = json::array();
  if (!g.json) {
    out << std::left << std::setw(20) << "channel" << std::setw(8) << "kappa"
        << std::setw(22) << "computed" << std::setw(22) << "expected"
        << "status\n";
  }
  for (const auto& r : rows) {
    const bool ok = std::abs(r.computed - r.expected) <= kTable1Tol;
    all_ok = all_ok && ok;
    if (g.json) {
      jrows.push_back({{"channel", r.channel},
                       {"kappa", std::isnan(r.kappa) ? json(nullptr) : json(r.kappa)},
                       {"computed", r.computed},
                       {"expected", r.expected},
                       {"ok", ok}});
    } else {
      out << std::left << std::setw(20) << r.channel << std::setw(8)
          << fmt(r.kappa) << std::setw(22) << fmt(r.computed) << std::setw(22)
          << fmt(r.expected) << (ok ? "PASS" : "FAIL") << '\n';
    }
  }
  if (g.json) {
    json j = report_header("table1", g);
    j["tolerance"] = kTable1Tol;
    j["rows"] = jrows;
    j["all_match"] = all_ok;
    emit_json(out, j);
  } else {
    out << (all_ok ? "all rows match" : "MISMATCH") << " (tolerance "
        << kTable1Tol << ")\n";
  }
  return all_ok ? kSuccess : kNonclassical;
}

struct FockFlags {
  std::string path;
  std::string probs;
  double eps = kDefaultBisectionEps;
  double neg_tol = kNegativityTol;
  int grid_points = RadialGrid::kDefaultPoints;
  double r_max = 0.0;  // 0 selects the state-dependent default
  int threads = 1;
};

int cmd_fock_depth(const GlobalFlags& g, const FockFlags& f, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    if (f.path.empty() == f.probs.empty()) {
      throw io::ParseError("give exactly one of a Fock file or --probs");
    }
    const FockDiagonalState state = f.probs.empty()
                                        ? io::read_fock(io::load_json_file(f.path))
                                        : io::parse_probs(f.probs);
    const RadialGrid grid = f.r_max > 0.0
                                ? RadialGrid(f.r_max, f.grid_points)
                                : RadialGrid::for_state(state, f.grid_points);
    const double depth = depth_bisection(state, grid, f.eps, f.neg_tol, f.threads);
    if (g.json) {
      json j = report_header("fock-depth", g);
      j["input"] = f.probs.empty() ? json(f.path) : json(state.probs());
      j["tolerances"]["negativity"] = f.neg_tol;
      j["tolerances"]["eps"] = f.eps;
      j["grid"] = {{"r_max", grid.r_max()}, {"points", grid.points()}};
      j["result"] = {{"depth", depth}};
      emit_json(out, j);
    } else {
      out << "depth " << fmt(depth) << '\n';
    }
    return static_cast<int>(kSuccess);
  });
}

}  // namespace

std::vector<Table1Row> compute_table1() {
  std::vector<Table1Row> rows;
  auto add = [&](ChannelKind kind, double kappa, double expected) {
    rows.push_back({std::string(to_string(kind)), kappa,
                    depth_channel(canonical(kind, kappa)), expected});
  };
  for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    add(ChannelKind::kAttenuator, k, 2.0 * k * k);
  }
  for (double k : {1.5, 2.0, 5.0}) add(ChannelKind::kAmplifier, k, 2.0);
  for (double k : {0.5, 1.0, 2.0}) add(ChannelKind::kPhaseConjugation, k, 0.0);
  rows.push_back({std::string(to_string(ChannelKind::kSingular)),
                  std::numeric_limits<double>::quiet_NaN(),
                  depth_channel(canonical(ChannelKind::kSingular, 0.0)), 0.0});
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Nonclassicality depth of Gaussian states and channels", "ncdepth"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit a machine-readable JSON report");
  app.add_option("--tol", g.tol, "PSD tolerance on smallest eigenvalues")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--scheme", g.scheme, "Verdict driving the channel exit code")
      ->check(CLI::IsMember({"pon", "qpn"}));

  std::string path, path2, noise_path, out_path, kind;
  std::optional<double> kappa;
  bool analyze = false;
  FockFlags fock;

  auto* state = app.add_subcommand("state", "Depth and classicality of a Gaussian state");
  state->add_option("file", path, "State JSON file")->required();
  state->add_option("--noise", noise_path, "Noise matrix JSON to test for membership");

  auto* channel = app.add_subcommand("channel", "Classify a Gaussian channel");
  channel->add_option("file", path, "Channel JSON file")->required();
  channel->add_option("--noise", noise_path, "Extra noise matrix JSON");

  auto* canon = app.add_subcommand("canonical", "Emit a single-mode canonical channel");
  canon->add_option("kind", kind, "attenuator|amplifier|phase_conjugation|singular")
      ->required();
  canon->add_option("kappa", kappa, "Channel parameter");
  canon->add_option("--out", out_path, "Write the channel JSON here");
  canon->add_flag("--analyze", analyze, "Also print the channel verdict");

  auto* table1 = app.add_subcommand("table1", "Depths of the quantum-limited canonical channels");

  auto* fockcmd = app.add_subcommand("fock-depth", "Depth of a Fock-diagonal state by phase-space bisection");
  fockcmd->add_option("file", fock.path, "Fock JSON file {\"probs\": [...]}");
  fockcmd->add_option("--probs", fock.probs, "Comma-separated p0,p1,...");
  fockcmd->add_option("--eps", fock.eps, "Bisection width")->check(CLI::PositiveNumber);
  fockcmd->add_option("--neg-tol", fock.neg_tol, "Negativity tolerance")
      ->check(CLI::NonNegativeNumber);
  fockcmd->add_option("--grid-points", fock.grid_points, "Radial grid size")
      ->check(CLI::Range(RadialGrid::kMinPoints, 1 << 24));
  fockcmd->add_option("--r-max", fock.r_max, "Radial grid extent")
      ->check(CLI::PositiveNumber);
  fockcmd->add_option("--threads", fock.threads, "Worker threads for the grid scan")
      ->check(CLI::Range(1, 256));

  auto* comp = app.add_subcommand("compose", "Compose two channels (second file acts first)");
  comp->add_option("second", path2, "Channel applied last")->required();
  comp->add_option("first", path, "Channel applied first")->required();
  comp->add_option("--out", out_path, "Write the composed channel JSON here");
  comp->add_flag("--analyze", analyze, "Also print the composed channel verdict");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  if (*state) return cmd_state(g, path, noise_path, out, err);
  if (*channel) return cmd_channel(g, path, noise_path, out, err);
  if (*canon) return cmd_canonical(g, kind, kappa, out_path, analyze, out, err);
  if (*table1) return cmd_table1(g, out);
  if (*fockcmd) return cmd_fock_depth(g, fock, out, err);
  if (*comp) return cmd_compose(g, path2, path, out_path, analyze, out, err);
  return kParseError;
}

}  // namespace ncdepth::cli
