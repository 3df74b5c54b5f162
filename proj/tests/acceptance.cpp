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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ncdepth/cli.hpp"
#include "ncdepth/gaussian_channels.hpp"
#include "ncdepth/gaussian_states.hpp"
#include "ncdepth/phase_space_oracle.hpp"
#include "ncdepth/symplectic_core.hpp"
#include "test_support.hpp"

namespace {

using namespace ncdepth;
using testing::Rng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// 1. Table I reproduction within 1e-9, under 1 s.
Outcome table1() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"ncdepth", "table1"}, out, err);
  double worst = 0.0;
  for (const auto& row : cli::compute_table1()) {
    worst = std::max(worst, std::abs(row.computed - row.expected));
  }
  const double t = seconds_since(t0);
  return {code == 0 && worst <= 1e-9 && t < 1.0,
          "exit " + std::to_string(code) + ", max |diff| " + num(worst) + ", " + num(t) + " s"};
}

// 2. Gaussian-state depth in [0, 1]; 1000 states per n in {1,2,3}, under 10 s.
Outcome state_depth_range() {
  const auto t0 = Clock::now();
  Rng rng(2001);
  int violations = 0;
  double lo = 1e300, hi = -1e300;
  for (int modes : {1, 2, 3}) {
    for (int i = 0; i < 1000; ++i) {
      const double z = depth_state(testing::random_state(modes, rng));
      lo = std::min(lo, z);
      hi = std::max(hi, z);
      if (z < 0.0 || z > 1.0) ++violations;
    }
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < 10.0,
          std::to_string(violations) + " violations, range [" + num(lo) + ", " + num(hi) + "], " +
              num(t) + " s"};
}

// 3. Isotropic noise alpha*I renders classical / NB exactly from the depth
// on (checked at depth +- 1e-9, exact PSD test).
Outcome isotropic_threshold() {
  Rng rng(2002);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const int modes = 1 + i % 3;
    const GaussianState s = testing::random_state(modes, rng);
    const double z = depth_state(s);
    if (!noise_renders_classical(s, NoiseMatrix::isotropic(modes, z + 1e-9), 0.0)) ++failures;
    if (z > 1e-9 && noise_renders_classical(s, NoiseMatrix::isotropic(modes, z - 1e-9), 0.0)) {
      ++failures;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const int modes = 1 + i % 2;
    const GaussianChannel ch = testing::random_cp_channel(modes, rng);
    const double z = depth_channel(ch);
    if (!noise_renders_nb(ch, NoiseMatrix::isotropic(modes, z + 1e-9), 0.0)) ++failures;
    if (z > 1e-9 && noise_renders_nb(ch, NoiseMatrix::isotropic(modes, z - 1e-9), 0.0)) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " misplaced flips over 200 states + 200 channels"};
}

// 4. NB implies QPN-classical on 1000 random CP channels.
Outcome inclusion() {
  Rng rng(2003);
  int nb = 0, counterexamples = 0;
  for (int i = 0; i < 1000; ++i) {
    const int modes = 1 + i % 2;
    GaussianChannel ch = testing::random_cp_channel(modes, rng);
    // Push a third of the samples into the NB region so the implication is
    // exercised on both sides.
    if (i % 3 == 0) {
      ch = GaussianChannel(ch.x(), ch.y() + (depth_channel(ch) + 0.1) * RealMatrix2n::identity(modes));
    }
    const ChannelVerdict v = classify(ch);
    if (*v.nb) {
      ++nb;
      if (!*v.qpn_classical) ++counterexamples;
    }
  }
  return {counterexamples == 0 && nb > 0,
          std::to_string(nb) + " NB channels, " + std::to_string(counterexamples) + " counterexamples"};
}

// 5. Invariance of state depth under K(n) and of channel depth under
// symplectic pre- and passive post-processing.
Outcome invariance() {
  Rng rng(2004);
  double state_drift = 0.0, pre_v_drift = 0.0, pre_drift = 0.0, post_drift = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int modes = 1 + i % 3;
    const GaussianState s = testing::random_state(modes, rng);
    const RealMatrix2n r = random_orthosymplectic(modes, rng());
    state_drift = std::max(state_drift, std::abs(depth_state(apply_orthosymplectic(s, r)) - depth_state(s)));
  }
  for (int i = 0; i < 100; ++i) {
    const int modes = 1 + i % 2;
    const GaussianChannel ch = testing::random_cp_channel(modes, rng);
    const GaussianChannel pre = pre_process(ch, testing::random_symplectic(modes, rng));
    const Eigen::MatrixXcd v0 = characteristic_matrix(ch).mat();
    const double scale = std::max(1.0, v0.cwiseAbs().maxCoeff());
    pre_v_drift = std::max(pre_v_drift, (characteristic_matrix(pre).mat() - v0).cwiseAbs().maxCoeff() / scale);
    pre_drift = std::max(pre_drift, std::abs(depth_channel(pre) - depth_channel(ch)));
    const GaussianChannel post = post_process(ch, random_orthosymplectic(modes, rng()));
    post_drift = std::max(post_drift, std::abs(depth_channel(post) - depth_channel(ch)));
  }
  const bool pass = state_drift <= 1e-9 && pre_v_drift <= 1e-10 && pre_drift <= 1e-9 && post_drift <= 1e-9;
  return {pass, "state drift " + num(state_drift) + ", pre V drift (rel) " + num(pre_v_drift) +
                    ", pre depth drift " + num(pre_drift) + ", post depth drift " + num(post_drift)};
}

// 6. Added PSD noise never increases depth, for states and for channels
// relative to their quantum-limited version.
Outcome monotonicity() {
  Rng rng(2005);
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    const int modes = 1 + i % 3;
    const RealMatrix2n sm = testing::random_symplectic(modes, rng);
    const GaussianState pure = pure_cov_from_symplectic(sm);
    const NoiseMatrix delta(testing::random_psd(modes, rng, 1.0, 1 + i % (2 * modes)));
    if (depth_state(add_noise_state(pure, delta)) > depth_state(pure) + 1e-9) ++violations;
  }
  for (int i = 0; i < 500; ++i) {
    const int modes = 1 + i % 2;
    const GaussianChannel ql = quantum_limited(testing::random_x(modes, rng));
    const GaussianChannel noisy(ql.x(), ql.y() + testing::random_psd(modes, rng, 1.0, 1 + i % (2 * modes)));
    if (depth_channel(noisy) > depth_channel(ql) + 1e-9) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations over 500 states + 500 channels"};
}

// 7. Phase-space oracle cross-validation, under 30 s.
Outcome oracle() {
  const auto t0 = Clock::now();
  Rng rng(2006);
  double cross = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GaussianState s = testing::random_state(1, rng);
    cross = std::max(cross, std::abs(gaussian_crosscheck(s.cov(), 1e-8) - depth_state(s)));
  }
  double fock_err = 0.0;
  for (int n : {1, 2, 3}) {
    const FockDiagonalState f = FockDiagonalState::number(n);
    fock_err = std::max(fock_err, std::abs(depth_bisection(f, RadialGrid::for_state(f)) - 2.0));
  }
  const FockDiagonalState vac = FockDiagonalState::number(0);
  const double vac_depth = depth_bisection(vac, RadialGrid::for_state(vac));
  const double wigner = quasiprob_value(FockDiagonalState::number(1), 1.0, 0.0);
  const double wigner_err = std::abs(wigner + 2.0 / std::numbers::pi);
  const double t = seconds_since(t0);
  const bool pass = cross <= 1e-6 && fock_err <= 1e-2 && vac_depth == 0.0 && wigner_err <= 1e-9 && t < 30.0;
  return {pass, "crosscheck max err " + num(cross) + ", Fock |depth-2| max " + num(fock_err) +
                    ", vacuum " + num(vac_depth) + ", Wigner err " + num(wigner_err) + ", " + num(t) + " s"};
}

// 8. Output depth bounded by channel depth.
Outcome output_bound() {
  Rng rng(2007);
  int violations = 0;
  double worst = -1e300;
  for (int i = 0; i < 200; ++i) {
    const int modes = 1 + i % 2;
    const GaussianChannel ch = testing::random_cp_channel(modes, rng);
    const double gap = depth_state(apply_channel(testing::random_state(modes, rng), ch)) - depth_channel(ch);
    worst = std::max(worst, gap);
    if (gap > 1e-9) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations, max (output - channel) " + num(worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 table1 reproduction", table1},
      {"2 gaussian state depth range", state_depth_range},
      {"3 isotropic threshold equivalence", isotropic_threshold},
      {"4 NB implies QPN-classical", inclusion},
      {"5 invariance suite", invariance},
      {"6 monotonicity suite", monotonicity},
      {"7 oracle cross-validation", oracle},
      {"8 output-state bound", output_bound},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %-36s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
