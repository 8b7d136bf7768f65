#pragma once

#include <vector>

#include "sridge/radon.hpp"
#include "sridge/wavelet.hpp"

namespace sridge {

/// Ridgelet kernels xi (.) psi^(j) (and xi (.) Phi for the scaling ridgelet).
///
/// Harmonic profiles are sqrt(4pi/(2l+1)) xi_l0 psi^(j)_l0 = s_lambda_l psi^(j)_l0, real
/// and zero wherever the Radon eigenvalue vanishes.
template <typename Real>
struct RidgeletBank {
  KernelBank<Real> bank;
  RadonEigenvalues<Real> radon;
  VectorX<Real> scaling_profile;
  std::vector<VectorX<Real>> profiles;  // index j - J0

  int L() const { return bank.L(); }
  int spin() const { return radon.spin; }
  const WaveletParams<Real>& params() const { return bank.params; }
  const VectorX<Real>& profile(int j) const { return profiles.at(j - bank.params.J0); }
};

template <typename Real>
RidgeletBank<Real> build_ridgelets(const WaveletParams<Real>& params, int spin) {
  check_spin(params.L, spin);
  RidgeletBank<Real> rb{build_kernels(params), RadonEigenvalues<Real>(params.L, spin), {}, {}};
  rb.scaling_profile = rb.radon.lambda.cwiseProduct(rb.bank.scaling);
  for (const auto& psi : rb.bank.wavelets) rb.profiles.push_back(rb.radon.lambda.cwiseProduct(psi));
  return rb;
}

/// Ridgelet kernel j (or the scaling ridgelet when j < J0) as axisymmetric scalar coefficients.
template <typename Real>
HarmonicCoeffs<Real> ridgelet_kernel_coeffs(const RidgeletBank<Real>& rb, int j) {
  const VectorX<Real>& p = j < rb.params().J0 ? rb.scaling_profile : rb.profile(j);
  HarmonicCoeffs<Real> h(rb.L(), 0);
  for (int l = 0; l < rb.L(); ++l) h(l, 0) = p(l);
  return h;
}

/// Ridgelet analysis as a Radon transform followed by scalar wavelet analysis.
template <typename Real>
MultiScaleCoeffs<Real> ridgelet_analysis(const HarmonicCoeffs<Real>& f, const RidgeletBank<Real>& rb) {
  if (f.L() != rb.L() || f.spin() != rb.spin())
    throw DomainError("ridgelet_analysis: signal (L=" + std::to_string(f.L()) + ", s=" + std::to_string(f.spin()) +
                      ") does not match ridgelet bank (L=" + std::to_string(rb.L()) + ", s=" +
                      std::to_string(rb.spin()) + ")");
  return wavelet_analysis(radon_forward(f, rb.radon), rb.bank);
}

/// Exact synthesis for signals supported on l + s even: S^-1 W^-1 G.
template <typename Real>
HarmonicCoeffs<Real> ridgelet_synthesis(const MultiScaleCoeffs<Real>& g, const RidgeletBank<Real>& rb,
                                        ParityPolicy policy = ParityPolicy::strict) {
  return radon_inverse(wavelet_synthesis(g, rb.bank, 0), rb.radon, policy);
}

}  // namespace sridge
