#pragma once

#include <vector>

#include <unsupported/Eigen/FFT>

#include "sridge/core.hpp"

namespace sridge {

/// Unscaled length-n DFT, forward e^{-2 pi i kp/n} and backward e^{+2 pi i kp/n}.
///
/// kissfft costs about n * (sum of prime factors), which is quadratic for prime n, and
/// ring lengths 2L-1 are often prime (127, 8191). When a power-of-two convolution is
/// cheaper, the transform goes through Bluestein's chirp-z algorithm instead.
template <typename Real>
class RingFft {
 public:
  explicit RingFft(int n) : n_(n) {
    if (n < 1) throw DomainError("FFT length must be positive");
    int m = 1, log_m = 0;
    while (m < 2 * n - 1) {
      m *= 2;
      ++log_m;
    }
    // relative costs measured on kissfft; constant fitted at n = 127..2047
    if (double(n) * prime_factor_sum(n) <= 3.5 * m * log_m) return;

    m_ = m;
    a_.resize(m_);
    spec_.resize(m_);
    conv_.resize(m_);
    chirp_.resize(n);
    const long long two_n = 2LL * n;
    for (long long k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the phase argument small and exact
      const Real angle = pi<Real> * Real((k * k) % two_n) / Real(n);
      chirp_[k] = Complex<Real>(std::cos(angle), std::sin(angle));
    }
    std::vector<Complex<Real>> b(m_, Complex<Real>(0));
    b[0] = chirp_[0];
    for (int k = 1; k < n; ++k) b[k] = b[m_ - k] = chirp_[k];
    kernel_.resize(m_);
    pow2_.fwd(kernel_, b);
  }

  int size() const { return n_; }

  void forward(const std::vector<Complex<Real>>& in, std::vector<Complex<Real>>& out) {
    if (n_ == 1) {  // kissfft does not handle length one
      out.assign(in.begin(), in.begin() + 1);
      return;
    }
    if (m_ == 0) {
      direct_.SetFlag(Eigen::FFT<Real>::Unscaled);
      direct_.fwd(out, in);
      return;
    }
    std::fill(a_.begin(), a_.end(), Complex<Real>(0));
    for (int k = 0; k < n_; ++k) a_[k] = in[k] * std::conj(chirp_[k]);
    pow2_.fwd(spec_, a_);
    for (int k = 0; k < m_; ++k) spec_[k] *= kernel_[k];
    pow2_.inv(conv_, spec_);
    out.resize(n_);
    for (int k = 0; k < n_; ++k) out[k] = conv_[k] * std::conj(chirp_[k]);
  }

  void backward(const std::vector<Complex<Real>>& in, std::vector<Complex<Real>>& out) {
    if (n_ == 1) {
      out.assign(in.begin(), in.begin() + 1);
      return;
    }
    if (m_ == 0) {
      direct_.SetFlag(Eigen::FFT<Real>::Unscaled);
      direct_.inv(out, in);
      return;
    }
    std::vector<Complex<Real>> conj_in(n_);
    for (int k = 0; k < n_; ++k) conj_in[k] = std::conj(in[k]);
    forward(conj_in, out);
    for (auto& v : out) v = std::conj(v);
  }

  bool uses_bluestein() const { return m_ != 0; }

  /// Sum of prime factors with multiplicity (0 for n = 1).
  static int prime_factor_sum(int n) {
    int sum = 0;
    for (int p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        sum += p;
        n /= p;
      }
    return n > 1 ? sum + n : sum;
  }

 private:
  int n_;
  int m_ = 0;  // Bluestein convolution length, 0 when the direct path is used
  std::vector<Complex<Real>> chirp_;
  std::vector<Complex<Real>> kernel_;
  std::vector<Complex<Real>> a_, spec_, conv_;
  Eigen::FFT<Real> direct_;
  Eigen::FFT<Real> pow2_;  // scaled inverse, so the convolution comes out normalised
};

}  // namespace sridge
