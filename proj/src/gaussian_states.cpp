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

#include "ncdepth/gaussian_states.hpp"

#include <algorithm>
#include <complex>

namespace ncdepth {

namespace {

void require_same_modes(int a, int b, const char* who) {
  if (a != b) {
    throw std::invalid_argument(std::string(who) + ": mode count mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

RealMatrix2n symmetrized(const RealMatrix2n& m, const char* who) {
  if (!is_symmetric(m.mat())) {
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
  }
  return RealMatrix2n(0.5 * (m.mat() + m.mat().transpose()));
}

double min_eig_real(const RealMatrix2n& m) {
  return jacobi_eigen(m.mat()).values.minCoeff();
}

}  // namespace

double uncertainty_min_eig(const RealMatrix2n& cov) {
  const std::complex<double> i(0.0, 1.0);
  const Eigen::MatrixXcd m = cov.mat().cast<std::complex<double>>() +
                             i * omega(cov.modes()).mat();
  return min_eig_hermitian(HermitianMatrix(m));
}

GaussianState::GaussianState(RealMatrix2n cov,
                             std::optional<Eigen::VectorXd> mean)
    : cov_(symmetrized(cov, "GaussianState")), mean_(std::move(mean)) {
  if (mean_ && mean_->size() != cov_.dim()) {
    throw std::invalid_argument("GaussianState: mean has length " +
                                std::to_string(mean_->size()) +
                                ", expected " + std::to_string(cov_.dim()));
  }
  if (mean_ && !mean_->allFinite()) {
    throw std::invalid_argument("GaussianState: non-finite mean");
  }
  const double lmin = uncertainty_min_eig(cov_);
  if (lmin < -kPsdTol) {
    throw PhysicalityError(
        "GaussianState: covariance violates V + i*Omega >= 0", lmin);
  }
}

GaussianState GaussianState::vacuum(int modes) {
  return GaussianState(RealMatrix2n::identity(modes));
}

NoiseMatrix::NoiseMatrix(RealMatrix2n y) : y_(symmetrized(y, "NoiseMatrix")) {
  const double lmin = min_eig_real(y_);
  if (lmin < -kPsdTol) {
    throw PhysicalityError("NoiseMatrix: matrix is not positive semidefinite",
                           lmin);
  }
}

NoiseMatrix NoiseMatrix::isotropic(int modes, double alpha) {
  return NoiseMatrix(alpha * RealMatrix2n::identity(modes));
}

bool is_classical(const GaussianState& state, double tol) {
  return psd_geq(HermitianMatrix::from_real(state.cov()), 1.0, tol);
}

double depth_state(const GaussianState& state) {
  return std::max(0.0, 1.0 - min_eig_real(state.cov()));
}

GaussianState add_noise_state(const GaussianState& state,
                              const NoiseMatrix& y) {
  require_same_modes(state.modes(), y.modes(), "add_noise_state");
  return GaussianState(state.cov() + y.matrix(), state.mean());
}

bool noise_renders_classical(const GaussianState& state, const NoiseMatrix& y,
                             double tol) {
  require_same_modes(state.modes(), y.modes(), "noise_renders_classical");
  return psd_geq(HermitianMatrix::from_real(state.cov() + y.matrix()), 1.0,
                 tol);
}

double depth_set(std::span<const GaussianState> states) {
  if (states.empty()) {
    throw std::invalid_argument("depth_set: empty set of states");
  }
  double depth = 0.0;
  for (const auto& s : states) {
    require_same_modes(states.front().modes(), s.modes(), "depth_set");
    depth = std::max(depth, depth_state(s));
  }
  return depth;
}

GaussianState pure_cov_from_symplectic(const RealMatrix2n& s) {
  if (!is_symplectic(s)) {
    throw std::invalid_argument("pure_cov_from_symplectic: S is not symplectic");
  }
  return GaussianState(s * s.transpose());
}

GaussianState apply_orthosymplectic(const GaussianState& state,
                                    const RealMatrix2n& r) {
  require_same_modes(state.modes(), r.modes(), "apply_orthosymplectic");
  if (!is_orthosymplectic(r)) {
    throw std::invalid_argument(
        "apply_orthosymplectic: R is not orthosymplectic");
  }
  std::optional<Eigen::VectorXd> mean;
  if (state.mean()) mean = r.mat().transpose() * *state.mean();
  return GaussianState(r.transpose() * state.cov() * r, std::move(mean));
}

}  // namespace ncdepth
