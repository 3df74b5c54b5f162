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

#include "ncdepth/gaussian_channels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace ncdepth {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

void require_same_modes(int a, int b, const char* who) {
  if (a != b) {
    throw std::invalid_argument(std::string(who) + ": mode count mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

void require_cp(const GaussianChannel& ch, const char* who) {
  const double lmin = cp_min_eig(ch);
  if (lmin < -kPsdTol) {
    throw PhysicalityError(std::string(who) + ": channel is not CP", lmin);
  }
}

// X^T Omega X with exact antisymmetry restored.
Eigen::MatrixXd twisted_form(const RealMatrix2n& x) {
  const Eigen::MatrixXd t =
      x.mat().transpose() * omega(x.modes()).mat() * x.mat();
  return 0.5 * (t - t.transpose());
}

HermitianMatrix characteristic_with_noise(const GaussianChannel& ch,
                                          const Eigen::MatrixXd& y) {
  return HermitianMatrix(y.cast<std::complex<double>>() -
                         kI * twisted_form(ch.x()));
}

}  // namespace

GaussianChannel::GaussianChannel(RealMatrix2n x, RealMatrix2n y, Unchecked)
    : x_(std::move(x)), y_(std::move(y)) {
  require_same_modes(x_.modes(), y_.modes(), "GaussianChannel");
  if (!is_symmetric(y_.mat())) {
    throw std::invalid_argument("GaussianChannel: Y is not symmetric");
  }
  y_ = RealMatrix2n(0.5 * (y_.mat() + y_.mat().transpose()));
}

GaussianChannel::GaussianChannel(RealMatrix2n x, RealMatrix2n y)
    : GaussianChannel(std::move(x), std::move(y), Unchecked{}) {
  require_cp(*this, "GaussianChannel");
}

GaussianChannel GaussianChannel::unchecked(RealMatrix2n x, RealMatrix2n y) {
  return GaussianChannel(std::move(x), std::move(y), Unchecked{});
}

GaussianChannel GaussianChannel::identity(int modes) {
  return GaussianChannel(RealMatrix2n::identity(modes),
                         RealMatrix2n::zero(modes));
}

GaussianChannel GaussianChannel::additive_noise(const NoiseMatrix& y) {
  return GaussianChannel(RealMatrix2n::identity(y.modes()), y.matrix());
}

HermitianMatrix characteristic_matrix(const GaussianChannel& ch) {
  return characteristic_with_noise(ch, ch.y().mat());
}

double cp_min_eig(const GaussianChannel& ch) {
  const Eigen::MatrixXcd m = characteristic_matrix(ch).mat() +
                             kI * omega(ch.modes()).mat();
  return min_eig_hermitian(HermitianMatrix(m));
}

bool is_cp(const GaussianChannel& ch, double tol) {
  return cp_min_eig(ch) >= -tol;
}

bool is_nonclassicality_breaking(const GaussianChannel& ch, double tol) {
  require_cp(ch, "is_nonclassicality_breaking");
  return psd_geq(characteristic_matrix(ch), 1.0, tol);
}

bool is_qpn_classical(const GaussianChannel& ch, double tol) {
  require_cp(ch, "is_qpn_classical");
  const RealMatrix2n coherent_out = ch.x().transpose() * ch.x() + ch.y();
  return psd_geq(HermitianMatrix::from_real(coherent_out), 1.0, tol);
}

double depth_channel(const GaussianChannel& ch) {
  require_cp(ch, "depth_channel");
  return std::max(0.0, 1.0 - min_eig_hermitian(characteristic_matrix(ch)));
}

GaussianChannel compose(const GaussianChannel& ch2,
                        const GaussianChannel& ch1) {
  require_same_modes(ch1.modes(), ch2.modes(), "compose");
  require_cp(ch1, "compose");
  require_cp(ch2, "compose");
  const RealMatrix2n x = ch1.x() * ch2.x();
  const RealMatrix2n y = ch2.x().transpose() * ch1.y() * ch2.x() + ch2.y();
  return GaussianChannel(x, RealMatrix2n(0.5 * (y.mat() + y.mat().transpose())));
}

bool noise_renders_nb(const GaussianChannel& ch, const NoiseMatrix& extra,
                      double tol) {
  require_same_modes(ch.modes(), extra.modes(), "noise_renders_nb");
  require_cp(ch, "noise_renders_nb");
  return psd_geq(characteristic_with_noise(ch, ch.y().mat() + extra.matrix().mat()),
                 1.0, tol);
}

GaussianChannel quantum_limited(const RealMatrix2n& x) {
  const RealMatrix2n a(twisted_form(x) - omega(x.modes()).mat());
  return GaussianChannel(x, matrix_abs_antisym(a));
}

ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "attenuator") return ChannelKind::kAttenuator;
  if (name == "amplifier") return ChannelKind::kAmplifier;
  if (name == "phase_conjugation" || name == "phase-conjugation") {
    return ChannelKind::kPhaseConjugation;
  }
  if (name == "singular") return ChannelKind::kSingular;
  throw std::invalid_argument("unknown channel kind '" + std::string(name) +
                              "'");
}

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kAttenuator: return "attenuator";
    case ChannelKind::kAmplifier: return "amplifier";
    case ChannelKind::kPhaseConjugation: return "phase_conjugation";
    case ChannelKind::kSingular: return "singular";
  }
  return "unknown";
}

GaussianChannel canonical(ChannelKind kind, double kappa) {
  const RealMatrix2n id = RealMatrix2n::identity(1);
  const RealMatrix2n sigma_z = RealMatrix2n::diagonal({1.0, -1.0});
  const double k2 = kappa * kappa;
  switch (kind) {
    case ChannelKind::kAttenuator:
      if (!(kappa >= 0.0 && kappa <= 1.0)) {
        throw std::invalid_argument("attenuator requires 0 <= kappa <= 1");
      }
      return GaussianChannel(kappa * id, (1.0 - k2) * id);
    case ChannelKind::kAmplifier:
      if (!(kappa > 1.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("amplifier requires kappa > 1");
      }
      return GaussianChannel(kappa * id, (k2 - 1.0) * id);
    case ChannelKind::kPhaseConjugation:
      if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("phase conjugation requires kappa > 0");
      }
      return GaussianChannel(kappa * sigma_z, (k2 + 1.0) * id);
    case ChannelKind::kSingular:
      return GaussianChannel(RealMatrix2n::diagonal({1.0, 0.0}), id);
  }
  throw std::invalid_argument("unknown channel kind");
}

GaussianChannel pre_process(const GaussianChannel& ch, const RealMatrix2n& s) {
  require_same_modes(ch.modes(), s.modes(), "pre_process");
  if (!is_symplectic(s)) {
    throw std::invalid_argument("pre_process: S is not symplectic");
  }
  return GaussianChannel(s * ch.x(), ch.y());
}

GaussianChannel post_process(const GaussianChannel& ch, const RealMatrix2n& r) {
  require_same_modes(ch.modes(), r.modes(), "post_process");
  if (!is_orthosymplectic(r)) {
    throw std::invalid_argument("post_process: R is not orthosymplectic");
  }
  const RealMatrix2n y = r.transpose() * ch.y() * r;
  return GaussianChannel(ch.x() * r,
                         RealMatrix2n(0.5 * (y.mat() + y.mat().transpose())));
}

GaussianState apply_channel(const GaussianState& state,
                            const GaussianChannel& ch) {
  require_same_modes(state.modes(), ch.modes(), "apply_channel");
  require_cp(ch, "apply_channel");
  const RealMatrix2n v = ch.x().transpose() * state.cov() * ch.x() + ch.y();
  std::optional<Eigen::VectorXd> mean;
  if (state.mean()) mean = ch.x().mat().transpose() * *state.mean();
  return GaussianState(RealMatrix2n(0.5 * (v.mat() + v.mat().transpose())),
                       std::move(mean));
}

ChannelVerdict classify(const GaussianChannel& ch, double tol) {
  ChannelVerdict v;
  v.cp_min_eigenvalue = cp_min_eig(ch);
  v.cp = v.cp_min_eigenvalue >= -tol;
  if (!v.cp) return v;
  const double x = min_eig_hermitian(characteristic_matrix(ch));
  v.nb = x >= 1.0 - tol;
  const RealMatrix2n coherent_out = ch.x().transpose() * ch.x() + ch.y();
  v.qpn_classical = psd_geq(HermitianMatrix::from_real(coherent_out), 1.0, tol);
  v.depth = std::max(0.0, 1.0 - x);
  return v;
}

}  // namespace ncdepth
