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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ncdepth/gaussian_states.hpp"
#include "test_support.hpp"

namespace ncdepth {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;

// L_n(x) = sum_k (-1)^k C(n, k) x^k / k!.
// Extended precision: the alternating sum cancels heavily for large n x.
double laguerre_explicit(int n, double x) {
  long double sum = 0.0L;
  long double binom = 1.0L;
  long double xk_over_kfact = 1.0L;
  for (int k = 0; k <= n; ++k) {
    sum += (k % 2 ? -1.0L : 1.0L) * binom * xk_over_kfact;
    binom = binom * (n - k) / (k + 1);
    xk_over_kfact *= static_cast<long double>(x) / (k + 1);
  }
  return static_cast<double>(sum);
}

// Smoothed quasiprobability from its characteristic function
// chi(rho) = sum_n p_n L_n(rho^2) exp(-tau rho^2 / 2) by a radial Hankel
// transform, W(r) = (2/pi) int_0^inf chi(rho) J0(2 r rho) rho drho.
double quasiprob_by_quadrature(const std::vector<double>& p, double tau, double r) {
  const double rho_max = std::sqrt(2.0 * 60.0 / tau) + 2.0;
  const int steps = 20000;  // even, composite Simpson
  const double h = rho_max / steps;
  auto f = [&](double rho) {
    double chi = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      chi += p[n] * laguerre_explicit(static_cast<int>(n), rho * rho);
    }
    return chi * std::exp(-0.5 * tau * rho * rho) * std::cyl_bessel_j(0.0, 2.0 * r * rho) * rho;
  };
  double sum = f(0.0) + f(rho_max);
  for (int i = 1; i < steps; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return (2.0 / kPi) * sum * h / 3.0;
}

FockDiagonalState random_fock(Rng& rng, int max_cutoff = 5) {
  std::uniform_int_distribution<int> cutoff(0, max_cutoff);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(cutoff(rng)) + 1);
  double total = 0.0;
  for (double& x : p) total += (x = u(rng));
  for (double& x : p) x /= total;
  // Land the sum on 1 within rounding.
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s += p[i];
  p.back() = 1.0 - s;
  return FockDiagonalState(std::move(p));
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(laguerre(0, 3.7), 1.0);
  EXPECT_EQ(laguerre(1, 2.0), -1.0);
  EXPECT_NEAR(laguerre(2, 1.0), -0.5, 1e-15);
  EXPECT_THROW(laguerre(-1, 0.0), std::invalid_argument);
}

TEST(Laguerre, RecurrenceMatchesExplicitSum) {
  for (int n = 0; n <= 12; ++n) {
    for (double x : {0.0, 0.3, 1.0, 2.5, 7.0, 15.0}) {
      const double ref = laguerre_explicit(n, x);
      EXPECT_NEAR(laguerre(n, x), ref, 1e-10 * std::max(1.0, std::abs(ref))) << n << " " << x;
    }
  }
}

TEST(FockDiagonalState, Validation) {
  EXPECT_THROW(FockDiagonalState({}), std::invalid_argument);
  EXPECT_THROW(FockDiagonalState({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(FockDiagonalState({1.1, -0.1}), std::invalid_argument);
  EXPECT_EQ(FockDiagonalState::number(3).cutoff(), 3);
}

TEST(RadialGrid, Validation) {
  EXPECT_THROW(RadialGrid(0.0, 4096), std::invalid_argument);
  EXPECT_THROW(RadialGrid(3.0, 100), std::invalid_argument);
  const RadialGrid g = RadialGrid::for_state(FockDiagonalState::number(3));
  EXPECT_NEAR(g.r_max(), 2.0 * 2.0 + 4.0, 1e-15);
  EXPECT_EQ(g.points(), 4096);
  EXPECT_EQ(g.radius(0), 0.0);
  EXPECT_NEAR(g.radius(g.points() - 1), g.r_max(), 1e-15);
}

TEST(QuasiprobValue, Examples) {
  const FockDiagonalState vac = FockDiagonalState::number(0);
  for (double tau : {0.1, 0.5, 1.0, 1.7, 2.0}) {
    EXPECT_NEAR(quasiprob_value(vac, tau, 0.0), 2.0 / (kPi * tau), 1e-12);
  }
  const FockDiagonalState one = FockDiagonalState::number(1);
  for (double r : {0.0, 0.5, 1.0, 2.3}) {
    EXPECT_NEAR(quasiprob_value(one, 2.0, r), std::exp(-r * r) * r * r / kPi, 1e-15);
  }
  EXPECT_NEAR(quasiprob_value(one, 1.0, 0.0), -2.0 / kPi, 1e-9);
  EXPECT_THROW(quasiprob_value(one, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(quasiprob_value(one, 2.5, 0.0), std::invalid_argument);
  EXPECT_THROW(quasiprob_value(one, 1.0, -1.0), std::invalid_argument);
}

TEST(QuasiprobValue, MatchesHankelQuadrature) {
  Rng rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    const FockDiagonalState s = random_fock(rng, 4);
    for (double tau : {0.5, 1.0, 1.5}) {
      for (double r : {0.0, 0.4, 1.1, 2.0}) {
        EXPECT_NEAR(quasiprob_value(s, tau, r), quasiprob_by_quadrature(s.probs(), tau, r), 1e-8)
            << "trial " << trial << " tau " << tau << " r " << r;
      }
    }
  }
}

TEST(QuasiprobValue, ContinuousAtHusimiLimit) {
  const FockDiagonalState s({0.2, 0.3, 0.1, 0.4});
  for (double r : {0.0, 0.3, 1.0, 2.0}) {
    EXPECT_NEAR(quasiprob_value(s, 2.0 - 1e-7, r), quasiprob_value(s, 2.0, r), 1e-6);
  }
}

TEST(QuasiprobValue, Normalized) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const FockDiagonalState s = random_fock(rng);
    const double u_max = std::pow(RadialGrid::for_state(s).r_max(), 2);
    for (double tau : {0.5, 1.0, 2.0}) {
      // 2 pi int W r dr = pi int W d(r^2), composite Simpson in u = r^2.
      const int steps = 100000;
      const double h = u_max / steps;
      auto w = [&](int i) { return quasiprob_value(s, tau, std::sqrt(i * h)); };
      double sum = w(0) + w(steps);
      for (int i = 1; i < steps; ++i) sum += (i % 2 ? 4.0 : 2.0) * w(i);
      EXPECT_NEAR(kPi * sum * h / 3.0, 1.0, 1e-6) << "tau " << tau;
    }
  }
}

TEST(MinOverGrid, Examples) {
  const FockDiagonalState vac = FockDiagonalState::number(0);
  const FockDiagonalState one = FockDiagonalState::number(1);
  EXPECT_GT(min_over_grid(vac, 0.5, RadialGrid::for_state(vac)), 0.0);
  EXPECT_NEAR(min_over_grid(one, 1.0, RadialGrid::for_state(one)), -2.0 / kPi, 1e-12);
  EXPECT_NEAR(min_over_grid(one, 2.0, RadialGrid::for_state(one)), 0.0, 1e-15);
}

TEST(MinOverGrid, IndependentOfThreadCount) {
  Rng rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    const FockDiagonalState s = random_fock(rng);
    const RadialGrid g = RadialGrid::for_state(s);
    const double serial = min_over_grid(s, 0.8, g, 1);
    for (int threads : {2, 3, 7}) EXPECT_EQ(min_over_grid(s, 0.8, g, threads), serial);
  }
}

TEST(MinOverGrid, NondecreasingInTau) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const FockDiagonalState s = random_fock(rng);
    const RadialGrid g = RadialGrid::for_state(s);
    double prev = -1e300;
    for (double tau = 0.2; tau <= 2.0 + 1e-12; tau += 0.2) {
      // Further smoothing is a convolution with a Gaussian probability
      // density, which cannot lower the minimum.
      const double m = min_over_grid(s, std::min(tau, 2.0), g);
      EXPECT_GE(m, prev - 1e-12) << "tau " << tau;
      prev = m;
    }
  }
}

TEST(IsClassicalAfterNoise, Examples) {
  const FockDiagonalState vac = FockDiagonalState::number(0);
  const FockDiagonalState one = FockDiagonalState::number(1);
  EXPECT_TRUE(is_classical_after_noise(vac, 0.1, RadialGrid::for_state(vac)));
  EXPECT_FALSE(is_classical_after_noise(one, 1.5, RadialGrid::for_state(one)));
  EXPECT_TRUE(is_classical_after_noise(one, 2.0, RadialGrid::for_state(one)));
}

TEST(IsClassicalAfterNoise, ResolvesNarrowNegativity) {
  // For |2> at small tau the negative shell sits at r^2 ~ tau, far below
  // the base grid spacing.
  const FockDiagonalState two = FockDiagonalState::number(2);
  const RadialGrid g = RadialGrid::for_state(two);
  EXPECT_GE(min_over_grid(two, 1e-4, g), 0.0);
  EXPECT_FALSE(is_classical_after_noise(two, 1e-4, g));
  EXPECT_FALSE(is_classical_after_noise(two, 1.999, g));
}

TEST(DepthBisection, Examples) {
  const FockDiagonalState vac = FockDiagonalState::number(0);
  EXPECT_EQ(depth_bisection(vac, RadialGrid::for_state(vac)), 0.0);
  for (int n : {1, 2, 3}) {
    const FockDiagonalState s = FockDiagonalState::number(n);
    EXPECT_NEAR(depth_bisection(s, RadialGrid::for_state(s), 1e-4), 2.0, 1e-2) << "n = " << n;
  }
  // Regression constant: 0.5|0><0| + 0.5|1><1| has its minimum at the origin,
  // (2 tau - 2) / (pi tau^2), which changes sign at tau = 1.
  const FockDiagonalState half({0.5, 0.5});
  EXPECT_NEAR(depth_bisection(half, RadialGrid::for_state(half), 1e-7), 1.0, 1e-6);
  EXPECT_THROW(depth_bisection(half, RadialGrid::for_state(half), 0.0), std::invalid_argument);
}

TEST(DepthBisection, InRange) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const FockDiagonalState s = random_fock(rng, 4);
    const double z = depth_bisection(s, RadialGrid::for_state(s), 1e-4);
    EXPECT_GE(z, 0.0);
    EXPECT_LE(z, 2.0);
  }
}

TEST(GaussianCrosscheck, Examples) {
  EXPECT_EQ(gaussian_crosscheck(RealMatrix2n::identity(1), 1e-8), 0.0);
  EXPECT_NEAR(gaussian_crosscheck(RealMatrix2n::diagonal({0.25, 4.0}), 1e-8), 0.75, 1e-8);
  EXPECT_EQ(gaussian_crosscheck(3.0 * RealMatrix2n::identity(1), 1e-8), 0.0);
  EXPECT_THROW(gaussian_crosscheck(0.5 * RealMatrix2n::identity(1), 1e-8), PhysicalityError);
  EXPECT_THROW(gaussian_crosscheck(RealMatrix2n::identity(2), 1e-8), std::invalid_argument);
}

TEST(GaussianCrosscheck, AgreesWithClosedForm) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const GaussianState s = testing::random_state(1, rng);
    EXPECT_NEAR(gaussian_crosscheck(s.cov(), 1e-8), depth_state(s), 1e-6);
  }
}

}  // namespace
}  // namespace ncdepth
