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

#ifndef NCDEPTH_GAUSSIAN_STATES_HPP
#define NCDEPTH_GAUSSIAN_STATES_HPP

#include <optional>
#include <span>

#include "ncdepth/symplectic_core.hpp"

namespace ncdepth {

/// A Gaussian state given by its covariance matrix (vacuum = identity) and
/// an optional displacement. The mean never affects classicality or depth.
///
/// Construction enforces V = V^T and the uncertainty relation
/// V + i*Omega >= 0 (smallest eigenvalue >= -kPsdTol); the latter raises
/// PhysicalityError.
class GaussianState {
 public:
  explicit GaussianState(RealMatrix2n cov,
                         std::optional<Eigen::VectorXd> mean = std::nullopt);

  static GaussianState vacuum(int modes);

  int modes() const noexcept { return cov_.modes(); }
  const RealMatrix2n& cov() const noexcept { return cov_; }
  const std::optional<Eigen::VectorXd>& mean() const noexcept { return mean_; }

 private:
  RealMatrix2n cov_;
  std::optional<Eigen::VectorXd> mean_;
};

/// Smallest eigenvalue of V + i*Omega; non-negative for bona fide states.
double uncertainty_min_eig(const RealMatrix2n& cov);

/// Noise matrix of the additive classical noise channel: real, symmetric,
/// positive semidefinite.
class NoiseMatrix {
 public:
  explicit NoiseMatrix(RealMatrix2n y);
  static NoiseMatrix isotropic(int modes, double alpha);

  int modes() const noexcept { return y_.modes(); }
  const RealMatrix2n& matrix() const noexcept { return y_; }

 private:
  RealMatrix2n y_;
};

/// V >= I, the classicality criterion for Gaussian states.
bool is_classical(const GaussianState& state, double tol = kPsdTol);

/// Minimal isotropic noise rendering the state classical: max(0, 1 - x)
/// where x is the smallest eigenvalue of V.
double depth_state(const GaussianState& state);

/// V -> V + Y, mean unchanged.
GaussianState add_noise_state(const GaussianState& state, const NoiseMatrix& y);

/// Membership of Y in the set of noise matrices rendering the state
/// classical: V + Y >= I.
bool noise_renders_classical(const GaussianState& state, const NoiseMatrix& y,
                             double tol = kPsdTol);

/// Depth of a set of states, the maximum of the individual depths.
double depth_set(std::span<const GaussianState> states);

/// Pure state with covariance S S^T and zero mean.
GaussianState pure_cov_from_symplectic(const RealMatrix2n& s);

/// Passive transformation: V -> R^T V R, mean -> R^T mean.
GaussianState apply_orthosymplectic(const GaussianState& state,
                                    const RealMatrix2n& r);

}  // namespace ncdepth

#endif  // NCDEPTH_GAUSSIAN_STATES_HPP
