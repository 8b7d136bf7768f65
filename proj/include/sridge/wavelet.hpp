#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "sridge/sht.hpp"

namespace sridge {

namespace detail {

template <typename Real, typename F>
Real simpson_step(const F& f, Real a, Real b, Real fa, Real fm, Real fb, Real whole, Real tol, int depth) {
  const Real m = (a + b) / 2;
  const Real lm = (a + m) / 2, rm = (m + b) / 2;
  const Real flm = f(lm), frm = f(rm);
  const Real left = (m - a) / 6 * (fa + 4 * flm + fm);
  const Real right = (b - m) / 6 * (fm + 4 * frm + fb);
  const Real delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

/// Adaptive Simpson quadrature on [a, b] to absolute tolerance tol.
template <typename Real, typename F>
Real adaptive_simpson(const F& f, Real a, Real b, Real tol) {
  if (b <= a) return 0;
  const Real fa = f(a), fb = f(b), fm = f((a + b) / 2);
  const Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 60);
}

}  // namespace detail

/// Smooth plateau function k_alpha: 1 on t <= 1/alpha, 0 on t >= 1, and on the
/// transition k(t) = int_t^1 s_alpha(u)^2 du/u / int_{1/alpha}^1 s_alpha(u)^2 du/u with
/// the Schwartz bump s(t) = exp(-1/(1-t^2)) mapped onto [1/alpha, 1].
template <typename Real>
class GeneratingFunction {
 public:
  explicit GeneratingFunction(Real alpha) : alpha_(alpha) {
    if (!(alpha > 1)) throw DomainError("dilation parameter alpha must exceed 1");
    normaliser_ = integral(1 / alpha_);
  }

  Real alpha() const { return alpha_; }

  Real operator()(Real t) const {
    if (t <= 1 / alpha_) return 1;
    if (t >= 1) return 0;
    const Real v = integral(t) / normaliser_;
    return std::min<Real>(Real(1), std::max<Real>(Real(0), v));
  }

 private:
  Real bump_squared_over_u(Real u) const {
    const Real x = 2 * alpha_ / (alpha_ - 1) * (u - 1 / alpha_) - 1;
    if (x <= -1 || x >= 1) return 0;
    const Real s = std::exp(-1 / (1 - x * x));
    return s * s / u;
  }

  Real integral(Real t) const {
    auto f = [this](Real u) { return bump_squared_over_u(u); };
    return detail::adaptive_simpson<Real>(f, std::max(t, 1 / alpha_), Real(1), Real(1e-14));
  }

  Real alpha_;
  Real normaliser_;
};

/// k_alpha(t); see GeneratingFunction.
template <typename Real = double>
Real generating_k(Real alpha, Real t) {
  return GeneratingFunction<Real>(alpha)(t);
}

/// Scale-discretised tiling parameters. J is the smallest integer with alpha^J >= L-1,
/// so the telescoped tiling reaches every represented degree.
template <typename Real>
struct WaveletParams {
  int L;
  Real alpha;
  int J0;
  int J;

  WaveletParams(int L_, Real alpha_ = 2, int J0_ = 0) : L(BandLimit(L_)), alpha(alpha_), J0(J0_), J(max_scale(L_, alpha_)) {
    if (J0 < 0) throw DomainError("minimum scale J0 must be non-negative");
    if (J0 > J)
      throw DomainError("minimum scale J0=" + std::to_string(J0) + " exceeds maximum scale J=" + std::to_string(J) +
                        " for L=" + std::to_string(L));
  }

  int scales() const { return J - J0 + 1; }

  static int max_scale(int L, Real alpha) {
    if (!(alpha > 1)) throw DomainError("dilation parameter alpha must exceed 1");
    if (L < 2) throw DomainError("wavelet tiling requires L >= 2");
    int j = 0;
    Real p = 1;
    while (p < Real(L - 1)) {
      p *= alpha;
      ++j;
    }
    return j;
  }
};

/// Harmonic profiles (m = 0 coefficients) of the scaling function and of each wavelet.
///   Phi_l0     = sqrt((2l+1)/4pi) sqrt(k(l / alpha^J0))
///   psi^(j)_l0 = sqrt((2l+1)/4pi) kappa(l / alpha^j),  kappa(t) = sqrt(k(t/alpha) - k(t))
template <typename Real>
struct KernelBank {
  WaveletParams<Real> params;
  VectorX<Real> scaling;
  std::vector<VectorX<Real>> wavelets;  // index j - J0

  int L() const { return params.L; }
  const VectorX<Real>& wavelet(int j) const { return wavelets.at(j - params.J0); }
};

template <typename Real>
KernelBank<Real> build_kernels(const WaveletParams<Real>& params) {
  const int L = params.L;
  const GeneratingFunction<Real> k(params.alpha);

  // k(l / alpha^j) for j in [J0, J+1]; each value feeds two neighbouring scales
  std::vector<VectorX<Real>> plateau;
  for (int j = params.J0; j <= params.J + 1; ++j) {
    const Real scale = std::pow(params.alpha, Real(j));
    VectorX<Real> row(L);
    for (int l = 0; l < L; ++l) row(l) = k(Real(l) / scale);
    plateau.push_back(std::move(row));
  }

  KernelBank<Real> bank{params, VectorX<Real>(L), {}};
  for (int l = 0; l < L; ++l) bank.scaling(l) = std::sqrt((2 * l + 1) / (4 * pi<Real>)) * std::sqrt(plateau[0](l));
  for (int j = params.J0; j <= params.J; ++j) {
    const VectorX<Real>& lo = plateau[j - params.J0];
    const VectorX<Real>& hi = plateau[j - params.J0 + 1];
    VectorX<Real> psi(L);
    for (int l = 0; l < L; ++l) {
      const Real diff = std::max(Real(0), hi(l) - lo(l));
      psi(l) = std::sqrt((2 * l + 1) / (4 * pi<Real>)) * std::sqrt(diff);
    }
    bank.wavelets.push_back(std::move(psi));
  }
  return bank;
}

/// (4pi/(2l+1)) (|Phi_l0|^2 + sum_j |psi^(j)_l0|^2); one at every l for an admissible bank.
template <typename Real>
VectorX<Real> admissibility(const KernelBank<Real>& bank) {
  const int L = bank.L();
  VectorX<Real> out(L);
  for (int l = 0; l < L; ++l) {
    Real sum = bank.scaling(l) * bank.scaling(l);
    for (const auto& w : bank.wavelets) sum += w(l) * w(l);
    out(l) = 4 * pi<Real> / (2 * l + 1) * sum;
  }
  return out;
}

/// Scaling plus per-scale coefficient maps, all scalar signals at the same band-limit.
template <typename Real>
struct MultiScaleCoeffs {
  WaveletParams<Real> params;
  SphereSignal<Real> scaling;
  std::vector<SphereSignal<Real>> bands;  // index j - J0

  const SphereSignal<Real>& band(int j) const { return bands.at(j - params.J0); }
  SphereSignal<Real>& band(int j) { return bands.at(j - params.J0); }
};

/// Harmonic-domain wavelet analysis: each band is sht_inverse(axiconv(f, kernel)).
template <typename Real>
MultiScaleCoeffs<Real> wavelet_analysis(const HarmonicCoeffs<Real>& f, const KernelBank<Real>& bank) {
  if (f.L() != bank.L())
    throw DomainError("wavelet_analysis: signal band-limit " + std::to_string(f.L()) + " does not match kernels (" +
                      std::to_string(bank.L()) + ")");
  const ShtPlan<Real> plan(f.L(), 0);
  MultiScaleCoeffs<Real> out{bank.params, plan.inverse(axiconv_profile(f, bank.scaling)), {}};
  out.bands.reserve(bank.wavelets.size());
  for (const auto& psi : bank.wavelets) out.bands.push_back(plan.inverse(axiconv_profile(f, psi)));
  return out;
}

/// f_lm = sqrt(4pi/(2l+1)) [Phi_l0 (W^Phi)_lm + sum_j psi^(j)_l0 (W^psi(j))_lm].
template <typename Real>
HarmonicCoeffs<Real> wavelet_synthesis(const MultiScaleCoeffs<Real>& w, const KernelBank<Real>& bank, int target_spin) {
  const int L = bank.L();
  if (w.scaling.L() != L) throw DomainError("wavelet_synthesis: scaling band has inconsistent band-limit");
  if (w.bands.size() != bank.wavelets.size())
    throw DomainError("wavelet_synthesis: expected " + std::to_string(bank.wavelets.size()) + " bands, got " +
                      std::to_string(w.bands.size()));
  for (const auto& b : w.bands)
    if (b.L() != L) throw DomainError("wavelet_synthesis: band has inconsistent band-limit");
  check_spin(L, target_spin);

  const ShtPlan<Real> plan(L, 0);
  HarmonicCoeffs<Real> f(L, target_spin);
  const int l0 = std::abs(target_spin);
  auto accumulate = [&](const SphereSignal<Real>& band, const VectorX<Real>& kernel) {
    const HarmonicCoeffs<Real> c = plan.forward(band);
    for (int l = l0; l < L; ++l) {
      const Real k = std::sqrt(4 * pi<Real> / (2 * l + 1)) * kernel(l);
      if (k == 0) continue;
      for (int m = -l; m <= l; ++m) f(l, m) += k * c(l, m);
    }
  };
  accumulate(w.scaling, bank.scaling);
  for (std::size_t i = 0; i < w.bands.size(); ++i) accumulate(w.bands[i], bank.wavelets[i]);
  return f;
}

}  // namespace sridge
