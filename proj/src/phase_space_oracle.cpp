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

#include "ncdepth/phase_space_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "ncdepth/gaussian_states.hpp"

namespace ncdepth {

FockDiagonalState::FockDiagonalState(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("FockDiagonalState: empty probability vector");
  }
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument(
          "FockDiagonalState: probabilities must be finite and non-negative");
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("FockDiagonalState: probabilities sum to " +
                                std::to_string(total) + ", expected 1");
  }
}

FockDiagonalState FockDiagonalState::number(int n) {
  if (n < 0) throw std::invalid_argument("number state index must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p.back() = 1.0;
  return FockDiagonalState(std::move(p));
}

RadialGrid::RadialGrid(double r_max, int points)
    : r_max_(r_max), points_(points) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw std::invalid_argument("RadialGrid: r_max must be positive");
  }
  if (points < kMinPoints) {
    throw std::invalid_argument("RadialGrid: need at least " +
                                std::to_string(kMinPoints) + " points");
  }
}

RadialGrid RadialGrid::for_state(const FockDiagonalState& state, int points) {
  return RadialGrid(2.0 * std::sqrt(state.cutoff() + 1.0) + 4.0, points);
}

double RadialGrid::radius(int i) const {
  return r_max_ * std::sqrt(static_cast<double>(i) / (points_ - 1));
}

std::vector<double> RadialGrid::radii() const {
  std::vector<double> r(static_cast<std::size_t>(points_));
  for (int i = 0; i < points_; ++i) r[static_cast<std::size_t>(i)] = radius(i);
  return r;
}

double laguerre(int n, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: order must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 - x) * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double quasiprob_value(const FockDiagonalState& state, double tau, double r) {
  if (!(tau > 0.0 && tau <= 2.0)) {
    throw std::invalid_argument("quasiprob_value: tau must lie in (0, 2]");
  }
  if (!(r >= 0.0)) {
    throw std::invalid_argument("quasiprob_value: r must be non-negative");
  }
  const auto& p = state.probs();
  const double r2 = r * r;

  if (tau == 2.0) {
    // Husimi limit: e^{-r^2} r^{2n} / (pi n!).
    double sum = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      if (p[n] == 0.0) continue;
      const double nn = static_cast<double>(n);
      const double log_term =
          -r2 + (n == 0 ? 0.0 : nn * std::log(r2)) - std::lgamma(nn + 1.0);
      sum += p[n] * (n > 0 && r2 == 0.0 ? 0.0 : std::exp(log_term));
    }
    return sum / std::numbers::pi;
  }

  // s-ordered distribution, s = 1 - tau:
  //   2 / (pi (1 - s)) ((s + 1)/(s - 1))^n exp(-2 r^2 / (1 - s))
  //     L_n(4 r^2 / (1 - s^2)).
  // Each term is assembled in log-magnitude form so that small tau cannot
  // produce inf * 0.
  const double s = 1.0 - tau;
  const double ratio = (s + 1.0) / (s - 1.0);  // in (-inf, 0]
  const double log_abs_ratio = std::log(std::abs(ratio));
  const double log_prefactor = std::log(2.0 / (std::numbers::pi * tau));
  const double gaussian = -2.0 * r2 / tau;
  const double arg = 4.0 * r2 / (tau * (2.0 - tau));

  double sum = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (p[n] == 0.0) continue;
    const int order = static_cast<int>(n);
    const double lag = laguerre(order, arg);
    if (lag == 0.0) continue;
    const double sign = ((order % 2 == 1) ? -1.0 : 1.0) * (lag < 0.0 ? -1.0 : 1.0);
    const double log_mag = log_prefactor + order * log_abs_ratio + gaussian +
                           std::log(std::abs(lag));
    sum += p[n] * sign * std::exp(log_mag);
  }
  return sum;
}

double min_over_grid(const FockDiagonalState& state, double tau,
                     const RadialGrid& grid, int threads) {
  const int points = grid.points();
  const int workers = std::clamp(threads, 1, points);
  std::vector<double> partial(static_cast<std::size_t>(workers),
                              std::numeric_limits<double>::infinity());
  auto scan = [&](int w) {
    const int begin = static_cast<int>(static_cast<long long>(points) * w / workers);
    const int end =
        static_cast<int>(static_cast<long long>(points) * (w + 1) / workers);
    double m = std::numeric_limits<double>::infinity();
    for (int i = begin; i < end; ++i) {
      m = std::min(m, quasiprob_value(state, tau, grid.radius(i)));
    }
    partial[static_cast<std::size_t>(w)] = m;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  return *std::min_element(partial.begin(), partial.end());
}

std::optional<RadialGrid> negativity_window(const FockDiagonalState& state,
                                            double tau, const RadialGrid& grid) {
  if (tau >= 2.0) return std::nullopt;  // Husimi function, never negative
  // Every term p_n ((s+1)/(s-1))^n L_n(x) is positive beyond the largest
  // zero of L_N, and those zeros lie below 4N (Gershgorin on the Jacobi
  // matrix). The sign of the smoothed quasiprobability depends on r only
  // through x = 4 r^2 / (tau (2 - tau)).
  const double x_cap = 4.0 * state.cutoff() + 4.0;
  const double window = std::sqrt(x_cap * tau * (2.0 - tau) / 4.0);
  if (window >= grid.r_max()) return std::nullopt;
  return RadialGrid(window, grid.points());
}

bool is_classical_after_noise(const FockDiagonalState& state, double tau,
                              const RadialGrid& grid, double tol, int threads) {
  double m = min_over_grid(state, tau, grid, threads);
  if (const auto window = negativity_window(state, tau, grid)) {
    m = std::min(m, min_over_grid(state, tau, *window, threads));
  }
  return m >= -tol;
}

double depth_bisection(const FockDiagonalState& state, const RadialGrid& grid,
                       double eps, double tol, int threads) {
  if (!(eps > 0.0) || eps >= 2.0) {
    throw std::invalid_argument("depth_bisection: eps must lie in (0, 2)");
  }
  auto classical = [&](double tau) {
    return is_classical_after_noise(state, tau, grid, tol, threads);
  };
  if (classical(eps)) return 0.0;
  if (!classical(2.0)) return 2.0;
  double lo = eps;  // nonclassical
  double hi = 2.0;  // classical
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    (classical(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double gaussian_crosscheck(const RealMatrix2n& cov, double eps) {
  if (cov.modes() != 1) {
    throw std::invalid_argument("gaussian_crosscheck: single-mode covariance required");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("gaussian_crosscheck: eps must be positive");
  }
  const GaussianState state(cov);  // validates
  const RealMatrix2n id = RealMatrix2n::identity(1);
  auto classical = [&](double alpha) {
    return psd_geq(HermitianMatrix::from_real(state.cov() + alpha * id), 1.0,
                   0.0);
  };
  if (classical(0.0)) return 0.0;
  double lo = 0.0;
  double hi = 2.0;
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    (classical(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ncdepth
