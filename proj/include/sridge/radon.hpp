#pragma once

#include <cmath>
#include <string>

#include "sridge/harmonic.hpp"
#include "sridge/special.hpp"

namespace sridge {

/// What radon_inverse does with energy on degrees where the eigenvalue vanishes.
enum class ParityPolicy {
  strict,   ///< reject when that energy exceeds the rounding-noise threshold
  project,  ///< drop it silently
};

/// Squared-norm ratio above which inadmissible energy is treated as real signal.
inline constexpr double kOddEnergyTolerance = 1e-20;

/// Eigenvalues s_lambda_l of the spherical Radon transform for spin s.
///
/// s_lambda_l = 2pi (-1)^s sqrt((l-s)!/(l+s)!) P_l^s(0) for s >= 0. Negative spin uses
/// d^l_{s,0} = (-1)^s d^l_{|s|,0}, so s_lambda_l = 2pi sqrt((l-|s|)!/(l+|s|)!) P_l^{|s|}(0).
/// Zero for l + s odd, and for l < |s| where no spin-s harmonic exists.
template <typename Real>
struct RadonEigenvalues {
  int L;
  int spin;
  VectorX<Real> lambda;

  RadonEigenvalues(int L_, int s) : L(BandLimit(L_)), spin(s), lambda(VectorX<Real>::Zero(L_)) {
    check_spin(L, spin);
    const int as = std::abs(spin);
    const int phase = (spin >= 0 && as % 2 == 1) ? -1 : 1;
    for (int l = as; l < L; ++l) {
      const SignedLog<Real> p = log_legendre_origin<Real>(l, as);
      if (p.sign == 0) continue;
      // fold the factorial ratio into the same logarithm: P_l^s(0) alone overflows for large s
      const Real log_ratio = Real(0.5) * (std::lgamma(Real(l - as + 1)) - std::lgamma(Real(l + as + 1)));
      lambda(l) = phase * p.sign * 2 * pi<Real> * std::exp(log_ratio + p.log_abs);
    }
  }

  Real operator()(int l) const { return lambda(l); }
  bool admissible(int l) const { return lambda(l) != Real(0); }
};

template <typename Real = double>
RadonEigenvalues<Real> radon_eigenvalues(int L, int spin) {
  return RadonEigenvalues<Real>(L, spin);
}

/// Harmonic coefficients of the Funk-Radon kernel xi = delta(theta - pi/2):
/// xi_l0 = (-1)^s sqrt(pi(2l+1)) sqrt((l-s)!/(l+s)!) P_l^s(0), zero for m != 0.
template <typename Real = double>
HarmonicCoeffs<Real> funk_radon_kernel_coeffs(int L, int spin) {
  const RadonEigenvalues<Real> ev(L, spin);
  HarmonicCoeffs<Real> xi(L, spin);
  for (int l = std::abs(spin); l < L; ++l) xi(l, 0) = std::sqrt((2 * l + 1) / (4 * pi<Real>)) * ev(l);
  return xi;
}

/// (S f)_lm = s_lambda_l f_lm. Output is scalar.
template <typename Real>
HarmonicCoeffs<Real> radon_forward(const HarmonicCoeffs<Real>& f, const RadonEigenvalues<Real>& ev) {
  if (ev.L != f.L() || ev.spin != f.spin()) throw DomainError("radon_forward: eigenvalue table does not match signal");
  HarmonicCoeffs<Real> g(f.L(), 0);
  for (int l = std::abs(f.spin()); l < f.L(); ++l) {
    const Real lam = ev(l);
    for (int m = -l; m <= l; ++m) g(l, m) = lam * f(l, m);
  }
  return g;
}

template <typename Real>
HarmonicCoeffs<Real> radon_forward(const HarmonicCoeffs<Real>& f) {
  return radon_forward(f, RadonEigenvalues<Real>(f.L(), f.spin()));
}

/// Fraction of squared norm of g sitting on degrees where ev vanishes.
template <typename Real>
Real inadmissible_energy_fraction(const HarmonicCoeffs<Real>& g, const RadonEigenvalues<Real>& ev) {
  Real total = 0, bad = 0;
  for (int l = 0; l < g.L(); ++l) {
    Real e = 0;
    for (int m = -l; m <= l; ++m) e += std::norm(g(l, m));
    total += e;
    if (!ev.admissible(l)) bad += e;
  }
  return total > 0 ? bad / total : Real(0);
}

/// Inverse on the admissible subspace: f_lm = g_lm / s_lambda_l for l + s even.
template <typename Real>
HarmonicCoeffs<Real> radon_inverse(const HarmonicCoeffs<Real>& g, const RadonEigenvalues<Real>& ev,
                                   ParityPolicy policy = ParityPolicy::strict) {
  if (g.spin() != 0) throw DomainError("radon_inverse expects a scalar (spin 0) Radon image");
  if (ev.L != g.L()) throw DomainError("radon_inverse: eigenvalue table does not match band-limit");
  if (policy == ParityPolicy::strict) {
    const Real frac = inadmissible_energy_fraction(g, ev);
    if (frac > Real(kOddEnergyTolerance)) {
      throw InadmissibleInput("radon_inverse: input has odd-parity energy fraction " + std::to_string(double(frac)) +
                                  " (l+s odd) which the Radon transform cannot produce",
                              double(frac));
    }
  }
  HarmonicCoeffs<Real> f(g.L(), ev.spin);
  for (int l = std::abs(ev.spin); l < g.L(); ++l) {
    if (!ev.admissible(l)) continue;
    const Real inv = Real(1) / ev(l);
    for (int m = -l; m <= l; ++m) f(l, m) = g(l, m) * inv;
  }
  return f;
}

template <typename Real>
HarmonicCoeffs<Real> radon_inverse(const HarmonicCoeffs<Real>& g, int spin, ParityPolicy policy = ParityPolicy::strict) {
  return radon_inverse(g, RadonEigenvalues<Real>(g.L(), spin), policy);
}

}  // namespace sridge
