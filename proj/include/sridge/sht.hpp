#pragma once

#include <cmath>
#include <vector>

#include "sridge/fft.hpp"
#include "sridge/harmonic.hpp"
#include "sridge/wigner.hpp"

namespace sridge {

/// Exact spin-s spherical harmonic transform at band-limit L.
///
/// Ring kernels are sY_lm(theta_t, .) = (-1)^s sqrt((2l+1)/4pi) d^l_{m,-s}(theta_t) e^{i m phi}.
/// The d-functions are regenerated per ring by recursion in l instead of being stored,
/// which keeps memory at O(L^2) and cost at O(L^3). Rings t and L-1-t share one
/// recursion through d^l_{mn}(pi - theta) = (-1)^{l+n} d^l_{-m,n}(theta).
///
/// A plan is immutable once built and may be shared between threads.
template <typename Real>
class ShtPlan {
 public:
  ShtPlan(int L, int spin) : L_(BandLimit(L)), spin_(spin), grid_(L), norm_(L) {
    check_spin(L_, spin_);
    const int n = -spin_;
    columns_.reserve(2 * L_ - 1);
    for (int m = -(L_ - 1); m <= L_ - 1; ++m) columns_.emplace_back(L_, m, n);
    const Real phase = (spin_ % 2 == 0) ? Real(1) : Real(-1);
    for (int l = 0; l < L_; ++l) norm_(l) = phase * std::sqrt((2 * l + 1) / (4 * pi<Real>));
    cos_theta_.resize(L_);
    cos_half_.resize(L_);
    sin_half_.resize(L_);
    for (int t = 0; t < L_; ++t) {
      const Real theta = grid_.theta(t);
      cos_theta_(t) = grid_.rule.cos_nodes(t);
      cos_half_(t) = std::cos(theta / 2);
      sin_half_(t) = std::sin(theta / 2);
    }
  }

  int L() const { return L_; }
  int spin() const { return spin_; }
  const SamplingGrid<Real>& grid() const { return grid_; }

  HarmonicCoeffs<Real> forward(const SphereSignal<Real>& f) const {
    if (f.L() != L_ || f.spin() != spin_)
      throw DomainError("signal (L=" + std::to_string(f.L()) + ", s=" + std::to_string(f.spin()) +
                        ") does not match transform plan (L=" + std::to_string(L_) + ", s=" +
                        std::to_string(spin_) + ")");
    const int N = 2 * L_ - 1;

    // Fourier coefficients per ring, F(t, bin) = int f(theta_t, phi) e^{-i m phi} dphi.
    RingMatrix<Real> fourier(L_, N);
    {
      RingFft<Real> fft(N);
      std::vector<Complex<Real>> in(N), out(N);
      const Real scale = 2 * pi<Real> / N;
      for (int t = 0; t < L_; ++t) {
        for (int p = 0; p < N; ++p) in[p] = f(t, p);
        fft.forward(in, out);
        for (int k = 0; k < N; ++k) fourier(t, k) = out[k] * scale;
      }
    }

    HarmonicCoeffs<Real> result(L_, spin_);
    auto& data = result.coeffs();
    const int parity_n = (spin_ % 2 == 0) ? 1 : -1;  // (-1)^n with n = -s
    const int half = L_ / 2;
    const bool has_middle = (L_ % 2 == 1);

    parallel_for(L_, [&](int mm) {
      std::vector<Real> dpos(L_), dneg(L_);
      std::vector<Complex<Real>> acc_pos(L_, Complex<Real>(0)), acc_neg(L_, Complex<Real>(0));
      const int bin_pos = mm, bin_neg = (N - mm) % N;
      const WignerColumn<Real>& col_pos = column(mm);
      const WignerColumn<Real>& col_neg = column(-mm);
      const int lstart = std::max(mm, std::abs(spin_));

      for (int t = 0; t < half; ++t) {
        const int ts = L_ - 1 - t;
        col_pos.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dpos.data());
        if (mm > 0) col_neg.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dneg.data());
        const std::vector<Real>& dn = mm > 0 ? dneg : dpos;
        const Real w = grid_.weight(t);
        const Complex<Real> a_pos = w * fourier(t, bin_pos);
        const Complex<Real> b_pos = Real(parity_n) * w * fourier(ts, bin_pos);
        for (int l = lstart; l < L_; ++l) {
          const Real sgn = (l % 2 == 0) ? Real(1) : Real(-1);
          acc_pos[l] += a_pos * dpos[l] + (sgn * dn[l]) * b_pos;
        }
        if (mm > 0) {
          const Complex<Real> a_neg = w * fourier(t, bin_neg);
          const Complex<Real> b_neg = Real(parity_n) * w * fourier(ts, bin_neg);
          for (int l = lstart; l < L_; ++l) {
            const Real sgn = (l % 2 == 0) ? Real(1) : Real(-1);
            acc_neg[l] += a_neg * dneg[l] + (sgn * dpos[l]) * b_neg;
          }
        }
      }
      if (has_middle) {
        const int t = half;
        col_pos.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dpos.data());
        const Real w = grid_.weight(t);
        for (int l = lstart; l < L_; ++l) acc_pos[l] += w * fourier(t, bin_pos) * dpos[l];
        if (mm > 0) {
          col_neg.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dneg.data());
          for (int l = lstart; l < L_; ++l) acc_neg[l] += w * fourier(t, bin_neg) * dneg[l];
        }
      }
      for (int l = lstart; l < L_; ++l) {
        data(lm_index(l, mm)) = norm_(l) * acc_pos[l];
        if (mm > 0) data(lm_index(l, -mm)) = norm_(l) * acc_neg[l];
      }
    });
    return result;
  }

  SphereSignal<Real> inverse(const HarmonicCoeffs<Real>& c) const {
    if (c.L() != L_ || c.spin() != spin_)
      throw DomainError("coefficients (L=" + std::to_string(c.L()) + ", s=" + std::to_string(c.spin()) +
                        ") do not match transform plan (L=" + std::to_string(L_) + ", s=" +
                        std::to_string(spin_) + ")");
    const int N = 2 * L_ - 1;
    RingMatrix<Real> fourier = RingMatrix<Real>::Zero(L_, N);
    const auto& data = c.coeffs();
    const int parity_n = (spin_ % 2 == 0) ? 1 : -1;
    const int half = L_ / 2;
    const bool has_middle = (L_ % 2 == 1);

    parallel_for(L_, [&](int mm) {
      std::vector<Real> dpos(L_), dneg(L_);
      std::vector<Complex<Real>> cpos(L_, Complex<Real>(0)), cneg(L_, Complex<Real>(0));
      const int bin_pos = mm, bin_neg = (N - mm) % N;
      const WignerColumn<Real>& col_pos = column(mm);
      const WignerColumn<Real>& col_neg = column(-mm);
      const int lstart = std::max(mm, std::abs(spin_));
      if (lstart >= L_) return;
      for (int l = lstart; l < L_; ++l) {
        cpos[l] = norm_(l) * data(lm_index(l, mm));
        if (mm > 0) cneg[l] = norm_(l) * data(lm_index(l, -mm));
      }
      for (int t = 0; t < half; ++t) {
        const int ts = L_ - 1 - t;
        col_pos.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dpos.data());
        if (mm > 0) col_neg.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dneg.data());
        const std::vector<Real>& dn = mm > 0 ? dneg : dpos;
        Complex<Real> north(0), south(0);
        for (int l = lstart; l < L_; ++l) {
          const Real sgn = (l % 2 == 0) ? Real(1) : Real(-1);
          north += cpos[l] * dpos[l];
          south += cpos[l] * (sgn * dn[l]);
        }
        fourier(t, bin_pos) = north;
        fourier(ts, bin_pos) = Real(parity_n) * south;
        if (mm > 0) {
          Complex<Real> north_neg(0), south_neg(0);
          for (int l = lstart; l < L_; ++l) {
            const Real sgn = (l % 2 == 0) ? Real(1) : Real(-1);
            north_neg += cneg[l] * dneg[l];
            south_neg += cneg[l] * (sgn * dpos[l]);
          }
          fourier(t, bin_neg) = north_neg;
          fourier(ts, bin_neg) = Real(parity_n) * south_neg;
        }
      }
      if (has_middle) {
        const int t = half;
        col_pos.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dpos.data());
        Complex<Real> v(0);
        for (int l = lstart; l < L_; ++l) v += cpos[l] * dpos[l];
        fourier(t, bin_pos) = v;
        if (mm > 0) {
          col_neg.fill(cos_theta_(t), cos_half_(t), sin_half_(t), dneg.data());
          Complex<Real> u(0);
          for (int l = lstart; l < L_; ++l) u += cneg[l] * dneg[l];
          fourier(t, bin_neg) = u;
        }
      }
    });

    SphereSignal<Real> out(L_, spin_);
    RingFft<Real> fft(N);
    std::vector<Complex<Real>> in(N), res(N);
    for (int t = 0; t < L_; ++t) {
      for (int k = 0; k < N; ++k) in[k] = fourier(t, k);
      fft.backward(in, res);
      for (int p = 0; p < N; ++p) out(t, p) = res[p];
    }
    return out;
  }

 private:
  const WignerColumn<Real>& column(int m) const { return columns_[m + L_ - 1]; }

  int L_;
  int spin_;
  SamplingGrid<Real> grid_;
  VectorX<Real> norm_;
  VectorX<Real> cos_theta_, cos_half_, sin_half_;
  std::vector<WignerColumn<Real>> columns_;
};

/// Forward transform: f_lm = <f, sY_lm>, exact for signals band-limited at f.L().
template <typename Real>
HarmonicCoeffs<Real> sht_forward(const SphereSignal<Real>& f) {
  return ShtPlan<Real>(f.L(), f.spin()).forward(f);
}

/// Inverse transform: samples of sum_lm c_lm sY_lm on the grid.
template <typename Real>
SphereSignal<Real> sht_inverse(const HarmonicCoeffs<Real>& c) {
  return ShtPlan<Real>(c.L(), c.spin()).inverse(c);
}

/// Rotation in harmonic space: c'_{ln} = sum_m D^l_{nm}(alpha, beta, gamma) c_{lm},
/// D^l_{nm} = e^{-i n alpha} d^l_{nm}(beta) e^{-i m gamma}.
template <typename Real>
HarmonicCoeffs<Real> rotate_coeffs(const HarmonicCoeffs<Real>& c, const EulerAngles<Real>& r) {
  const int L = c.L();
  const WignerTable<Real> d(L, r.beta);
  HarmonicCoeffs<Real> out(L, c.spin());
  VectorXc<Real> phase_alpha(2 * L - 1), phase_gamma(2 * L - 1);
  for (int m = -(L - 1); m <= L - 1; ++m) {
    phase_alpha(m + L - 1) = std::polar(Real(1), -m * r.alpha);
    phase_gamma(m + L - 1) = std::polar(Real(1), -m * r.gamma);
  }
  for (int l = std::abs(c.spin()); l < L; ++l) {
    const int width = 2 * l + 1;
    VectorXc<Real> in(width);
    for (int m = -l; m <= l; ++m) in(m + l) = phase_gamma(m + L - 1) * c(l, m);
    const VectorXc<Real> rotated = d.block(l).template cast<Complex<Real>>() * in;
    for (int n = -l; n <= l; ++n) out(l, n) = phase_alpha(n + L - 1) * rotated(n + l);
  }
  return out;
}

/// Axisymmetric convolution with a harmonic profile h_l (the m = 0 coefficients of the
/// kernel): g_lm = sqrt(4pi/(2l+1)) f_lm conj(h_l). Output is scalar.
template <typename Real, typename Profile>
HarmonicCoeffs<Real> axiconv_profile(const HarmonicCoeffs<Real>& f, const Eigen::MatrixBase<Profile>& h) {
  const int L = f.L();
  if (h.size() != L) throw DomainError("kernel profile length does not match band-limit");
  HarmonicCoeffs<Real> g(L, 0);
  for (int l = std::abs(f.spin()); l < L; ++l) {
    const Complex<Real> k = std::sqrt(4 * pi<Real> / (2 * l + 1)) * std::conj(Complex<Real>(h(l)));
    for (int m = -l; m <= l; ++m) g(l, m) = f(l, m) * k;
  }
  return g;
}

/// Axisymmetric convolution f (.) h. h must have no m != 0 content.
template <typename Real>
HarmonicCoeffs<Real> axiconv(const HarmonicCoeffs<Real>& f, const HarmonicCoeffs<Real>& h) {
  if (f.spin() != h.spin()) throw DomainError("axiconv: spin mismatch between signal and kernel");
  if (f.L() != h.L()) throw DomainError("axiconv: band-limit mismatch between signal and kernel");
  const int L = f.L();
  VectorXc<Real> profile(L);
  for (int l = 0; l < L; ++l) {
    for (int m = -l; m <= l; ++m)
      if (m != 0 && h(l, m) != Complex<Real>(0))
        throw PreconditionError("axiconv: kernel is not axisymmetric (nonzero order m != 0)");
    profile(l) = h(l, 0);
  }
  return axiconv_profile(f, profile);
}

}  // namespace sridge
