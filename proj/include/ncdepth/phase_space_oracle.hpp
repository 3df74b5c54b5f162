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

#ifndef NCDEPTH_PHASE_SPACE_ORACLE_HPP
#define NCDEPTH_PHASE_SPACE_ORACLE_HPP

#include <optional>
#include <vector>

#include "ncdepth/symplectic_core.hpp"

namespace ncdepth {

/// Single-mode state diagonal in the Fock basis, sum_n p_n |n><n|.
/// Rotationally symmetric in phase space, so its quasiprobabilities depend
/// only on the radius |alpha|.
class FockDiagonalState {
 public:
  explicit FockDiagonalState(std::vector<double> probs);
  static FockDiagonalState number(int n);

  const std::vector<double>& probs() const noexcept { return probs_; }
  int cutoff() const noexcept { return static_cast<int>(probs_.size()) - 1; }

 private:
  std::vector<double> probs_;
};

/// Radii r_i = r_max * sqrt(i / (points - 1)), uniform in r^2.
class RadialGrid {
 public:
  static constexpr int kMinPoints = 256;
  static constexpr int kDefaultPoints = 4096;

  RadialGrid(double r_max, int points);
  /// r_max = 2 sqrt(N + 1) + 4 for cutoff N.
  static RadialGrid for_state(const FockDiagonalState& state,
                              int points = kDefaultPoints);

  double r_max() const noexcept { return r_max_; }
  int points() const noexcept { return points_; }
  double radius(int i) const;
  std::vector<double> radii() const;

 private:
  double r_max_;
  int points_;
};

inline constexpr double kNegativityTol = 1e-10;
inline constexpr double kDefaultBisectionEps = 1e-6;

/// Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre(int n, double x);

/// Quasiprobability of the state after isotropic Gaussian smoothing of
/// strength tau, i.e. the s-ordered distribution with s = 1 - tau, at
/// |alpha| = r. tau = 2 gives the Husimi function. tau must lie in (0, 2].
double quasiprob_value(const FockDiagonalState& state, double tau, double r);

/// Minimum of quasiprob_value over the grid radii. The scan may be split
/// across `threads` workers; the result does not depend on the split.
double min_over_grid(const FockDiagonalState& state, double tau,
                     const RadialGrid& grid, int threads = 1);

/// Rescaled grid covering the only radii where the tau-smoothed
/// quasiprobability can be negative, at the resolution of `grid`. Empty when
/// `grid` already covers that range or tau = 2.
std::optional<RadialGrid> negativity_window(const FockDiagonalState& state,
                                            double tau, const RadialGrid& grid);

/// Non-negativity (to -tol) of the tau-smoothed quasiprobability, scanned on
/// `grid` and on its negativity window. The window keeps the test resolved
/// for small tau and for tau near 2, where negative regions shrink to
/// r^2 ~ tau (2 - tau).
bool is_classical_after_noise(const FockDiagonalState& state, double tau,
                              const RadialGrid& grid,
                              double tol = kNegativityTol, int threads = 1);

/// Smallest smoothing tau in [0, 2] making the quasiprobability
/// non-negative on the grid, located by bisection on [eps, 2] to width eps.
/// Returns 0 for states classical already at tau = eps.
double depth_bisection(const FockDiagonalState& state, const RadialGrid& grid,
                       double eps = kDefaultBisectionEps,
                       double tol = kNegativityTol, int threads = 1);

/// Bisection on alpha in [0, 2] for the smallest alpha with V + alpha I >= I.
/// Independent check of depth_state for a single-mode covariance.
double gaussian_crosscheck(const RealMatrix2n& cov, double eps);

}  // namespace ncdepth

#endif  // NCDEPTH_PHASE_SPACE_ORACLE_HPP
