#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "sridge/core.hpp"

namespace sridge {

/// Signed logarithm: value = sign * exp(log_abs). sign == 0 encodes an exact zero.
template <typename Real>
struct SignedLog {
  Real log_abs{-std::numeric_limits<Real>::infinity()};
  int sign{0};

  Real value() const { return sign == 0 ? Real(0) : sign * std::exp(log_abs); }
};

/// log of P_l^m(0) (Condon-Shortley phase) with the sign carried separately.
///
/// P_l^m(0) = (-1)^((l+m)/2) (l+m)! / (2^l ((l+m)/2)! ((l-m)/2)!) for l+m even, 0 otherwise.
/// Factorials go through lgamma so the result is usable far beyond the range where
/// (l+m)! overflows.
template <typename Real = double>
SignedLog<Real> log_legendre_origin(int l, int m) {
  if (l < 0 || m < 0 || m > l)
    throw DomainError("legendre_origin requires 0 <= m <= l, got (" + std::to_string(l) + ", " +
                      std::to_string(m) + ")");
  SignedLog<Real> out;
  if ((l + m) % 2 != 0) return out;
  const int half_sum = (l + m) / 2;
  const int half_diff = (l - m) / 2;
  out.log_abs = std::lgamma(Real(l + m + 1)) - l * std::log(Real(2)) - std::lgamma(Real(half_sum + 1)) -
                std::lgamma(Real(half_diff + 1));
  out.sign = (half_sum % 2 == 0) ? 1 : -1;
  return out;
}

/// Associated Legendre function at the origin, P_l^m(0).
template <typename Real = double>
Real legendre_origin(int l, int m) {
  return log_legendre_origin<Real>(l, m).value();
}

/// Gauss-Legendre rule in x = cos(theta), stored as colatitudes.
template <typename Real>
struct QuadratureRule {
  VectorX<Real> nodes;    // theta_t, strictly increasing in (0, pi)
  VectorX<Real> weights;  // in the cos(theta) measure, sum to 2
  VectorX<Real> cos_nodes;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// L-point Gauss-Legendre rule, exact for polynomials in cos(theta) of degree <= 2L-1.
///
/// Nodes come from Newton iteration on P_L seeded at Chebyshev-like guesses. Only the
/// northern half is solved; the southern half is the exact mirror image so that ring
/// t and ring L-1-t sit at theta and pi - theta.
template <typename Real = double>
QuadratureRule<Real> gauss_legendre(int L) {
  if (L < 1) throw DomainError("gauss_legendre requires L >= 1");
  QuadratureRule<Real> rule;
  rule.nodes.resize(L);
  rule.weights.resize(L);
  rule.cos_nodes.resize(L);

  const Real tol = 4 * std::numeric_limits<Real>::epsilon();
  const int half = (L + 1) / 2;
  for (int k = 0; k < half; ++k) {
    Real x = std::cos(pi<Real> * (k + Real(0.75)) / (L + Real(0.5)));
    Real dp = 0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = x;
      for (int j = 2; j <= L; ++j) {
        const Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_L(x), p0 = P_{L-1}(x)
      dp = L * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (converged) break;
      if (std::abs(dx) <= tol) converged = true;  // one polishing step after convergence
    }
    if (L % 2 == 1 && k == half - 1) x = 0;  // centre node of odd rules
    // recompute derivative at the final node for the weight
    {
      Real p0 = 1, p1 = x;
      for (int j = 2; j <= L; ++j) {
        const Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = L * (x * p1 - p0) / (x * x - 1);
    }
    const Real w = 2 / ((1 - x * x) * dp * dp);
    const Real theta = std::acos(x);
    rule.nodes(k) = theta;
    rule.cos_nodes(k) = x;
    rule.weights(k) = w;
    rule.nodes(L - 1 - k) = pi<Real> - theta;
    rule.cos_nodes(L - 1 - k) = -x;
    rule.weights(L - 1 - k) = w;
  }
  if (L % 2 == 1) rule.nodes(L / 2) = pi<Real> / 2;
  return rule;
}

}  // namespace sridge
