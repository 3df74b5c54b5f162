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

#ifndef NCDEPTH_SYMPLECTIC_CORE_HPP
#define NCDEPTH_SYMPLECTIC_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncdepth {

// Phase-space quadratures are ordered (q1, p1, ..., qn, pn) throughout.
// Units are chosen so that the vacuum covariance matrix is the identity.

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kGroupTol = 1e-10;

/// Raised when an input is well-formed but physically inadmissible: a
/// covariance matrix violating V + i*Omega >= 0, or a non-CP channel.
/// `min_eigenvalue` is the offending smallest eigenvalue.
class PhysicalityError : public std::invalid_argument {
 public:
  PhysicalityError(const std::string& what, double min_eigenvalue)
      : std::invalid_argument(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Dense real square matrix of even dimension 2n acting on phase space.
/// Holds covariance matrices, noise matrices, channel X matrices and
/// group elements alike.
class RealMatrix2n {
 public:
  explicit RealMatrix2n(Eigen::MatrixXd m);
  RealMatrix2n(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix2n identity(int modes);
  static RealMatrix2n zero(int modes);
  static RealMatrix2n diagonal(const std::vector<double>& d);
  static RealMatrix2n from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  int modes() const noexcept { return dim() / 2; }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& mat() const noexcept { return m_; }

  RealMatrix2n transpose() const { return RealMatrix2n(m_.transpose()); }
  std::vector<std::vector<double>> rows() const;

  friend RealMatrix2n operator+(const RealMatrix2n& a, const RealMatrix2n& b);
  friend RealMatrix2n operator-(const RealMatrix2n& a, const RealMatrix2n& b);
  friend RealMatrix2n operator*(const RealMatrix2n& a, const RealMatrix2n& b);
  friend RealMatrix2n operator*(double s, const RealMatrix2n& a);

 private:
  Eigen::MatrixXd m_;
};

/// Largest absolute entry of a - b.
double max_abs_diff(const RealMatrix2n& a, const RealMatrix2n& b);

/// Dense complex Hermitian matrix. Construction rejects inputs further than
/// kSymmetryTol (relative to the largest entry, floor 1) from Hermitian and
/// stores the symmetrized (H + H^dagger)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& h);
  static HermitianMatrix from_real(const RealMatrix2n& m);

  int dim() const noexcept { return static_cast<int>(h_.rows()); }
  const Eigen::MatrixXcd& mat() const noexcept { return h_; }

  /// Real symmetric 2d x 2d embedding [[A, -B], [B, A]] of H = A + iB.
  Eigen::MatrixXd real_embedding() const;

 private:
  Eigen::MatrixXcd h_;
};

/// Block-diagonal symplectic form, n blocks of [[0, 1], [-1, 0]].
RealMatrix2n omega(int modes);

bool is_symplectic(const RealMatrix2n& s, double tol = kGroupTol);
/// Membership in K(n) = Sp(2n, R) intersected with SO(2n, R).
bool is_orthosymplectic(const RealMatrix2n& r, double tol = kGroupTol);

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, matching `values`
};

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm is at most 1e-13 times max(1, ||A||_F).
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a);

double min_eig_hermitian(const HermitianMatrix& h);
double max_eig_hermitian(const HermitianMatrix& h);

/// True iff h >= c * I up to `tol` on the smallest eigenvalue.
bool psd_geq(const HermitianMatrix& h, double c, double tol = kPsdTol);

/// Largest eigenvalue of a symmetric matrix.
double spectral_norm(const RealMatrix2n& y);

/// (A^T A)^{1/2} for real antisymmetric A.
RealMatrix2n matrix_abs_antisym(const RealMatrix2n& a);

/// Deterministic pseudo-random element of K(n). Built from a random n x n
/// unitary U = A + iB as [[A, -B], [B, A]] in q...q,p...p ordering, then
/// permuted to q,p interleaved.
RealMatrix2n random_orthosymplectic(int modes, std::uint64_t seed);

/// Reorders (q1..qn, p1..pn) to (q1, p1, ..., qn, pn), and back.
RealMatrix2n qqpp_to_qpqp(const RealMatrix2n& m);
RealMatrix2n qpqp_to_qqpp(const RealMatrix2n& m);
Eigen::VectorXd qqpp_to_qpqp(const Eigen::VectorXd& v);

bool is_symmetric(const Eigen::MatrixXd& m, double tol = kSymmetryTol);
bool is_antisymmetric(const Eigen::MatrixXd& m, double tol = kSymmetryTol);

}  // namespace ncdepth

#endif  // NCDEPTH_SYMPLECTIC_CORE_HPP
