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

#include "ncdepth/symplectic_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace ncdepth {

namespace {

double entry_scale(const Eigen::MatrixXd& m) {
  return std::max(1.0, m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
}

double entry_scale(const Eigen::MatrixXcd& m) {
  return std::max(1.0, m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
}

void require_even_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
  if (m.rows() < 2 || m.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": dimension must be even and at least 2");
  }
}

void require_modes(int modes, const char* who) {
  if (modes < 1) {
    throw std::invalid_argument(std::string(who) + ": mode count must be >= 1");
  }
}

// Index of qpqp coordinate k in qqpp ordering.
int qqpp_index(int k, int modes) { return k % 2 == 0 ? k / 2 : modes + k / 2; }

Eigen::MatrixXd qqpp_permutation(int modes) {
  const int d = 2 * modes;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) p(k, qqpp_index(k, modes)) = 1.0;
  return p;
}

}  // namespace

RealMatrix2n::RealMatrix2n(Eigen::MatrixXd m) : m_(std::move(m)) {
  require_even_square(m_, "RealMatrix2n");
  if (!m_.allFinite()) {
    throw std::invalid_argument("RealMatrix2n: non-finite entry");
  }
}

RealMatrix2n::RealMatrix2n(
    std::initializer_list<std::initializer_list<double>> rows)
    : RealMatrix2n(from_rows(std::vector<std::vector<double>>(rows.begin(),
                                                              rows.end()))) {}

RealMatrix2n RealMatrix2n::identity(int modes) {
  require_modes(modes, "identity");
  return RealMatrix2n(Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

RealMatrix2n RealMatrix2n::zero(int modes) {
  require_modes(modes, "zero");
  return RealMatrix2n(Eigen::MatrixXd::Zero(2 * modes, 2 * modes));
}

RealMatrix2n RealMatrix2n::diagonal(const std::vector<double>& d) {
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(
      d.data(), static_cast<Eigen::Index>(d.size()));
  return RealMatrix2n(Eigen::MatrixXd(v.asDiagonal()));
}

RealMatrix2n RealMatrix2n::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != d) {
      throw std::invalid_argument("RealMatrix2n: ragged or non-square rows");
    }
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return RealMatrix2n(std::move(m));
}

std::vector<std::vector<double>> RealMatrix2n::rows() const {
  std::vector<std::vector<double>> out(dim(), std::vector<double>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) out[i][j] = m_(i, j);
  return out;
}

static void require_same_dim(const RealMatrix2n& a, const RealMatrix2n& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

RealMatrix2n operator+(const RealMatrix2n& a, const RealMatrix2n& b) {
  require_same_dim(a, b);
  return RealMatrix2n(a.m_ + b.m_);
}

RealMatrix2n operator-(const RealMatrix2n& a, const RealMatrix2n& b) {
  require_same_dim(a, b);
  return RealMatrix2n(a.m_ - b.m_);
}

RealMatrix2n operator*(const RealMatrix2n& a, const RealMatrix2n& b) {
  require_same_dim(a, b);
  return RealMatrix2n(a.m_ * b.m_);
}

RealMatrix2n operator*(double s, const RealMatrix2n& a) {
  return RealMatrix2n(s * a.m_);
}

double max_abs_diff(const RealMatrix2n& a, const RealMatrix2n& b) {
  require_same_dim(a, b);
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * entry_scale(m);
}

bool is_antisymmetric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m + m.transpose()).cwiseAbs().maxCoeff() <= tol * entry_scale(m);
}

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  if (!h.allFinite()) {
    throw std::invalid_argument("HermitianMatrix: non-finite entry");
  }
  const Eigen::MatrixXcd adj = h.adjoint();
  if ((h - adj).cwiseAbs().maxCoeff() > kSymmetryTol * entry_scale(h)) {
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian");
  }
  h_ = 0.5 * (h + adj);
}

HermitianMatrix HermitianMatrix::from_real(const RealMatrix2n& m) {
  return HermitianMatrix(m.mat().cast<std::complex<double>>());
}

Eigen::MatrixXd HermitianMatrix::real_embedding() const {
  const Eigen::Index d = h_.rows();
  const Eigen::MatrixXd a = h_.real();
  const Eigen::MatrixXd b = h_.imag();
  Eigen::MatrixXd e(2 * d, 2 * d);
  e.topLeftCorner(d, d) = a;
  e.topRightCorner(d, d) = -b;
  e.bottomLeftCorner(d, d) = b;
  e.bottomRightCorner(d, d) = a;
  return e;
}

RealMatrix2n omega(int modes) {
  require_modes(modes, "omega");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return RealMatrix2n(std::move(w));
}

bool is_symplectic(const RealMatrix2n& s, double tol) {
  const Eigen::MatrixXd w = omega(s.modes()).mat();
  return (s.mat().transpose() * w * s.mat() - w).cwiseAbs().maxCoeff() <= tol;
}

bool is_orthosymplectic(const RealMatrix2n& r, double tol) {
  if (!is_symplectic(r, tol)) return false;
  const Eigen::MatrixXd gram = r.mat().transpose() * r.mat();
  const auto d = gram.rows();
  if ((gram - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  return r.mat().determinant() > 0.0;
}

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("jacobi_eigen: matrix is not square");
  }
  if (!is_symmetric(input)) {
    throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
  }
  const Eigen::Index d = input.rows();
  Eigen::MatrixXd a = 0.5 * (input + input.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(d, d);

  const double threshold = 1e-13 * std::max(1.0, a.norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < d - 1; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p, q); t is the smaller root of
        // t^2 + 2 theta t - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < d; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < d; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < d; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
  SymmetricEigen out{Eigen::VectorXd(d), Eigen::MatrixXd(d, d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    out.vectors.col(i) = v.col(src);
  }
  return out;
}

double min_eig_hermitian(const HermitianMatrix& h) {
  return jacobi_eigen(h.real_embedding()).values.minCoeff();
}

double max_eig_hermitian(const HermitianMatrix& h) {
  return jacobi_eigen(h.real_embedding()).values.maxCoeff();
}

bool psd_geq(const HermitianMatrix& h, double c, double tol) {
  return min_eig_hermitian(h) >= c - tol;
}

double spectral_norm(const RealMatrix2n& y) {
  if (!is_symmetric(y.mat())) {
    throw std::invalid_argument("spectral_norm: matrix is not symmetric");
  }
  return jacobi_eigen(y.mat()).values.maxCoeff();
}

RealMatrix2n matrix_abs_antisym(const RealMatrix2n& a) {
  if (!is_antisymmetric(a.mat())) {
    throw std::invalid_argument(
        "matrix_abs_antisym: matrix is not antisymmetric");
  }
  const Eigen::MatrixXd gram = a.mat().transpose() * a.mat();
  const SymmetricEigen eig = jacobi_eigen(0.5 * (gram + gram.transpose()));
  const Eigen::VectorXd roots =
      eig.values.unaryExpr([](double x) { return std::sqrt(std::max(x, 0.0)); });
  Eigen::MatrixXd out = eig.vectors * roots.asDiagonal() * eig.vectors.transpose();
  return RealMatrix2n(0.5 * (out + out.transpose()));
}

RealMatrix2n random_orthosymplectic(int modes, std::uint64_t seed) {
  require_modes(modes, "random_orthosymplectic");
  using cd = std::complex<double>;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXcd u(modes, modes);
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j) u(i, j) = cd(normal(rng), normal(rng));

  // Modified Gram-Schmidt on the columns. Gaussian columns are linearly
  // independent with probability one.
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < j; ++k) {
      const cd proj = u.col(k).dot(u.col(j));  // conjugates the left operand
      u.col(j) -= proj * u.col(k);
    }
    u.col(j) /= u.col(j).norm();
  }

  const Eigen::MatrixXd a = u.real();
  const Eigen::MatrixXd b = u.imag();
  Eigen::MatrixXd block(2 * modes, 2 * modes);
  block << a, -b, b, a;
  return qqpp_to_qpqp(RealMatrix2n(std::move(block)));
}

RealMatrix2n qqpp_to_qpqp(const RealMatrix2n& m) {
  const Eigen::MatrixXd p = qqpp_permutation(m.modes());
  return RealMatrix2n(p * m.mat() * p.transpose());
}

RealMatrix2n qpqp_to_qqpp(const RealMatrix2n& m) {
  const Eigen::MatrixXd p = qqpp_permutation(m.modes());
  return RealMatrix2n(p.transpose() * m.mat() * p);
}

Eigen::VectorXd qqpp_to_qpqp(const Eigen::VectorXd& v) {
  if (v.size() < 2 || v.size() % 2 != 0) {
    throw std::invalid_argument("qqpp_to_qpqp: vector length must be even");
  }
  return qqpp_permutation(static_cast<int>(v.size() / 2)) * v;
}

}  // namespace ncdepth
