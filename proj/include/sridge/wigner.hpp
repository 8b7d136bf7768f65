#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "sridge/core.hpp"

namespace sridge {

/// Upward three-term recursion in l for the Wigner d-function d^l_{mn}(beta) at fixed (m, n).
///
/// The recursion coefficients do not depend on beta, so one instance serves every
/// colatitude. Seeded at l0 = max(|m|, |n|) with the closed-form edge value; seeds
/// that would underflow are carried with an integer power-of-two exponent until the
/// sequence grows back into range, and report 0 before that.
template <typename Real>
class WignerColumn {
 public:
  WignerColumn() = default;

  WignerColumn(int L, int m, int n) : L_(L), m_(m), n_(n) {
    l0_ = std::max(std::abs(m), std::abs(n));
    if (l0_ >= L_) return;

    // d^{l0}_{mn}(beta) = sign * exp(log_norm) * cos(beta/2)^a * sin(beta/2)^b
    int top, other;  // value is d^{l0}_{top, other} up to the (-1)^{n-m} swap
    sign_ = 1;
    if (std::abs(m) >= std::abs(n)) {
      top = m;
      other = n;
    } else {
      top = n;
      other = m;
      if ((n - m) % 2 != 0) sign_ = -sign_;
    }
    if (top >= 0) {
      pow_cos_ = l0_ + other;
      pow_sin_ = l0_ - other;
      if ((l0_ - other) % 2 != 0) sign_ = -sign_;
    } else {
      pow_cos_ = l0_ - other;
      pow_sin_ = l0_ + other;
    }
    log_norm_ = Real(0.5) * (std::lgamma(Real(2 * l0_ + 1)) - std::lgamma(Real(l0_ + other + 1)) -
                             std::lgamma(Real(l0_ - other + 1)));

    const int steps = L_ - 1 - l0_;
    a_.resize(steps);
    b_.resize(steps);
    c_.resize(steps);
    const Real mm = Real(m) * m, nn = Real(n) * n;
    for (int i = 0; i < steps; ++i) {
      const Real l = Real(l0_ + i);
      const Real lp = l + 1;
      const Real denom = std::sqrt((lp * lp - mm) * (lp * lp - nn));
      a_[i] = lp * (2 * l + 1) / denom;
      if (l0_ + i == 0) {
        b_[i] = 0;
        c_[i] = 0;
      } else {
        c_[i] = Real(m) * Real(n) / (l * lp);
        b_[i] = lp * std::sqrt((l * l - mm) * (l * l - nn)) / (l * denom);
      }
    }
  }

  int first_degree() const { return l0_; }

  /// Writes d^l_{mn}(beta) for l in [0, L) into out (zeros below l0).
  void fill(Real beta, Real* out) const {
    fill(std::cos(beta), std::cos(beta / 2), std::sin(beta / 2), out);
  }

  void fill(Real cos_beta, Real cos_half, Real sin_half, Real* out) const {
    const int lstart = std::min(l0_, L_);
    for (int l = 0; l < lstart; ++l) out[l] = 0;
    if (l0_ >= L_) return;

    if ((pow_cos_ > 0 && cos_half == 0) || (pow_sin_ > 0 && sin_half == 0)) {
      for (int l = l0_; l < L_; ++l) out[l] = 0;
      return;
    }
    Real log_seed = log_norm_;
    if (pow_cos_ > 0) log_seed += pow_cos_ * std::log(cos_half);
    if (pow_sin_ > 0) log_seed += pow_sin_ * std::log(sin_half);

    constexpr int kChunk = 512;
    const Real ln2 = std::log(Real(2));
    int scale = 0;  // true value = mantissa * 2^(-kChunk * scale)
    const Real floor_log = -Real(600) * ln2;
    if (log_seed < floor_log) scale = static_cast<int>(std::ceil((floor_log - log_seed) / (kChunk * ln2)));
    Real cur = sign_ * std::exp(log_seed + scale * kChunk * ln2);
    Real prev = 0;
    out[l0_] = scale == 0 ? cur : Real(0);
    for (int i = 0, l = l0_; l + 1 < L_; ++i, ++l) {
      const Real next = a_[i] * (cos_beta - c_[i]) * cur - b_[i] * prev;
      prev = cur;
      cur = next;
      if (scale > 0) {
        if (std::abs(cur) >= 1) {
          cur = std::ldexp(cur, -kChunk);
          prev = std::ldexp(prev, -kChunk);
          --scale;
        }
      }
      out[l + 1] = scale == 0 ? cur : Real(0);
    }
  }

 private:
  int L_{0}, m_{0}, n_{0}, l0_{0};
  int pow_cos_{0}, pow_sin_{0}, sign_{1};
  Real log_norm_{0};
  std::vector<Real> a_, b_, c_;
};

/// All d^l_{mn}(beta) for l < L, |m|, |n| <= l.
template <typename Real>
class WignerTable {
 public:
  WignerTable(int L, Real beta) : L_(L), beta_(beta) {
    if (L < 1) throw DomainError("wigner table requires L >= 1");
    if (!(beta >= 0 && beta <= pi<Real>)) throw DomainError("wigner beta must lie in [0, pi]");
    blocks_.reserve(L);
    for (int l = 0; l < L; ++l) blocks_.emplace_back(Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(2 * l + 1, 2 * l + 1));
    std::vector<Real> column(L);
    const Real cb = std::cos(beta), ch = std::cos(beta / 2), sh = std::sin(beta / 2);
    for (int m = -(L - 1); m <= L - 1; ++m) {
      for (int n = -(L - 1); n <= L - 1; ++n) {
        WignerColumn<Real> rec(L, m, n);
        rec.fill(cb, ch, sh, column.data());
        for (int l = rec.first_degree(); l < L; ++l) blocks_[l](m + l, n + l) = column[l];
      }
    }
  }

  int L() const { return L_; }
  Real beta() const { return beta_; }

  Real operator()(int l, int m, int n) const { return blocks_[l](m + l, n + l); }

  /// (2l+1) x (2l+1) block indexed [m + l, n + l].
  const Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>& block(int l) const { return blocks_[l]; }

 private:
  int L_;
  Real beta_;
  std::vector<Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>> blocks_;
};

/// Table of d^l_{mn}(beta) for l < lmax.
template <typename Real = double>
WignerTable<Real> wigner_d_slice(int lmax, Real beta) {
  return WignerTable<Real>(lmax, beta);
}

}  // namespace sridge
