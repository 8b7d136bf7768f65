#pragma once

#include <string>

#include "sridge/core.hpp"
#include "sridge/special.hpp"

namespace sridge {

/// Spin spherical harmonic coefficients f_{lm}, l < L, stored at lm_index(l, m).
/// Entries with l < |spin| are identically zero.
template <typename Real>
class HarmonicCoeffs {
 public:
  using Scalar = Complex<Real>;

  HarmonicCoeffs(int L, int spin) : L_(BandLimit(L)), spin_(spin), data_(VectorXc<Real>::Zero(Eigen::Index(L) * L)) {
    check_spin(L_, spin_);
  }

  HarmonicCoeffs(int L, int spin, VectorXc<Real> data) : L_(BandLimit(L)), spin_(spin), data_(std::move(data)) {
    check_spin(L_, spin_);
    if (data_.size() != Eigen::Index(L_) * L_)
      throw FormatError("coefficient vector has length " + std::to_string(data_.size()) + ", expected " +
                        std::to_string(L_ * L_));
    for (int l = 0; l < std::abs(spin_); ++l)
      for (int m = -l; m <= l; ++m)
        if (data_(lm_index(l, m)) != Scalar(0))
          throw DomainError("spin-" + std::to_string(spin_) + " coefficients must vanish for l < |s|");
  }

  static HarmonicCoeffs Zero(int L, int spin) { return HarmonicCoeffs(L, spin); }

  int L() const { return L_; }
  int spin() const { return spin_; }

  Scalar operator()(int l, int m) const {
    return l < L_ ? data_(lm_index(l, m)) : Scalar(0);
  }
  Scalar& operator()(int l, int m) {
    if (l >= L_ || l < std::abs(spin_))
      throw DomainError("degree " + std::to_string(l) + " not writable for L=" + std::to_string(L_) +
                        ", spin=" + std::to_string(spin_));
    return data_(lm_index(l, m));
  }

  const VectorXc<Real>& coeffs() const { return data_; }
  VectorXc<Real>& coeffs() { return data_; }

  /// Same data tagged with another spin (low-degree entries are cleared).
  HarmonicCoeffs with_spin(int spin) const {
    HarmonicCoeffs out(L_, spin);
    out.data_ = data_;
    for (int l = 0; l < std::min(std::abs(spin), int(L_)); ++l)
      for (int m = -l; m <= l; ++m) out.data_(lm_index(l, m)) = 0;
    return out;
  }

 private:
  int L_;
  int spin_;
  VectorXc<Real> data_;
};

/// Max |a - b| over all coefficients.
template <typename Real>
Real max_abs_error(const HarmonicCoeffs<Real>& a, const HarmonicCoeffs<Real>& b) {
  if (a.L() != b.L()) throw DomainError("band-limit mismatch");
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

/// Samples on the Gauss-Legendre x equiangular grid: L rings by 2L-1 longitudes.
template <typename Real>
class SphereSignal {
 public:
  SphereSignal(int L, int spin) : L_(BandLimit(L)), spin_(spin), samples_(RingMatrix<Real>::Zero(L, 2 * L - 1)) {}

  SphereSignal(int L, int spin, RingMatrix<Real> samples) : L_(BandLimit(L)), spin_(spin), samples_(std::move(samples)) {
    if (samples_.rows() != L_ || samples_.cols() != 2 * L_ - 1)
      throw FormatError("sample array is " + std::to_string(samples_.rows()) + "x" + std::to_string(samples_.cols()) +
                        ", expected " + std::to_string(L_) + "x" + std::to_string(2 * L_ - 1));
  }

  int L() const { return L_; }
  int spin() const { return spin_; }
  int rings() const { return L_; }
  int longitudes() const { return 2 * L_ - 1; }

  Complex<Real> operator()(int ring, int p) const { return samples_(ring, p); }
  Complex<Real>& operator()(int ring, int p) { return samples_(ring, p); }

  const RingMatrix<Real>& samples() const { return samples_; }
  RingMatrix<Real>& samples() { return samples_; }

 private:
  int L_;
  int spin_;
  RingMatrix<Real> samples_;
};

/// Sample positions of the band-limit-L grid.
template <typename Real>
struct SamplingGrid {
  QuadratureRule<Real> rule;
  VectorX<Real> phis;

  explicit SamplingGrid(int L) : rule(gauss_legendre<Real>(L)), phis(2 * L - 1) {
    const int n = 2 * L - 1;
    for (int p = 0; p < n; ++p) phis(p) = 2 * pi<Real> * p / n;
  }

  int L() const { return rule.size(); }
  Real theta(int ring) const { return rule.nodes(ring); }
  Real phi(int p) const { return phis(p); }
  Real weight(int ring) const { return rule.weights(ring); }
  /// Quadrature weight of one sample in the sin(theta) dtheta dphi measure.
  Real area_weight(int ring) const { return rule.weights(ring) * 2 * pi<Real> / phis.size(); }
};

}  // namespace sridge
