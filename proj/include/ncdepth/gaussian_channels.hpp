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

#ifndef NCDEPTH_GAUSSIAN_CHANNELS_HPP
#define NCDEPTH_GAUSSIAN_CHANNELS_HPP

#include <optional>
#include <string_view>

#include "ncdepth/gaussian_states.hpp"
#include "ncdepth/symplectic_core.hpp"

namespace ncdepth {

/// Bosonic Gaussian channel given by the pair (X, Y). Acts on covariance
/// matrices as V -> X^T V X + Y, i.e. chi_out(xi) = chi_in(X xi) *
/// exp(-xi^T Y xi / 2).
class GaussianChannel {
 public:
  /// Checked constructor: throws PhysicalityError unless the pair is
  /// completely positive.
  GaussianChannel(RealMatrix2n x, RealMatrix2n y);

  /// Candidate pair that may violate complete positivity (tomography data,
  /// tests). Shapes and symmetry of Y are still enforced.
  static GaussianChannel unchecked(RealMatrix2n x, RealMatrix2n y);

  static GaussianChannel identity(int modes);
  /// Additive classical noise channel (I, Y).
  static GaussianChannel additive_noise(const NoiseMatrix& y);

  int modes() const noexcept { return x_.modes(); }
  const RealMatrix2n& x() const noexcept { return x_; }
  const RealMatrix2n& y() const noexcept { return y_; }

 private:
  struct Unchecked {};
  GaussianChannel(RealMatrix2n x, RealMatrix2n y, Unchecked);

  RealMatrix2n x_;
  RealMatrix2n y_;
};

struct ChannelVerdict {
  bool cp = false;
  /// Smallest eigenvalue of V(X,Y) + i*Omega; negative means not CP.
  double cp_min_eigenvalue = 0.0;
  // The fields below are empty when cp is false.
  std::optional<bool> nb;
  std::optional<bool> qpn_classical;
  std::optional<double> depth;
};

/// V(X,Y) = Y - i X^T Omega X.
HermitianMatrix characteristic_matrix(const GaussianChannel& ch);

/// Smallest eigenvalue of V(X,Y) + i*Omega.
double cp_min_eig(const GaussianChannel& ch);
bool is_cp(const GaussianChannel& ch, double tol = kPsdTol);

/// Nonclassicality breaking: V(X,Y) >= I.
bool is_nonclassicality_breaking(const GaussianChannel& ch,
                                 double tol = kPsdTol);

/// Classical in the coherent-input sense: every coherent input is mapped to a
/// classical output, X^T X + Y >= I.
bool is_qpn_classical(const GaussianChannel& ch, double tol = kPsdTol);

/// max(0, 1 - x), x the smallest eigenvalue of V(X,Y). Lies in [0, 2].
double depth_channel(const GaussianChannel& ch);

/// ch1 followed by ch2: X = X1 X2, Y = X2^T Y1 X2 + Y2.
GaussianChannel compose(const GaussianChannel& ch2, const GaussianChannel& ch1);

/// V(X, Y + Y') >= I.
bool noise_renders_nb(const GaussianChannel& ch, const NoiseMatrix& extra,
                      double tol = kPsdTol);

/// (X, Y_QL) with Y_QL = |X^T Omega X - Omega|, the matrix absolute value.
/// Y_QL is one minimal CP noise matrix for X; it need not be the unique one.
GaussianChannel quantum_limited(const RealMatrix2n& x);

enum class ChannelKind { kAttenuator, kAmplifier, kPhaseConjugation, kSingular };

ChannelKind parse_channel_kind(std::string_view name);
std::string_view to_string(ChannelKind kind);

/// Single-mode quantum-limited canonical forms:
///   attenuator        (k I, (1 - k^2) I),   0 <= k <= 1
///   amplifier         (k I, (k^2 - 1) I),   k > 1
///   phase conjugation (k sigma_z, (k^2 + 1) I), k > 0
///   singular          ((I + sigma_z)/2, I), k ignored
GaussianChannel canonical(ChannelKind kind, double kappa);

/// Symplectic S applied before the channel: (S X, Y).
GaussianChannel pre_process(const GaussianChannel& ch, const RealMatrix2n& s);
/// Passive R applied after the channel: (X R, R^T Y R).
GaussianChannel post_process(const GaussianChannel& ch, const RealMatrix2n& r);

GaussianState apply_channel(const GaussianState& state,
                            const GaussianChannel& ch);

ChannelVerdict classify(const GaussianChannel& ch, double tol = kPsdTol);

}  // namespace ncdepth

#endif  // NCDEPTH_GAUSSIAN_CHANNELS_HPP
