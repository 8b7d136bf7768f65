#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sridge/random.hpp"
#include "sridge/wavelet.hpp"

using namespace sridge;

TEST(GeneratingFunctionTest, PlateauAndSupport) {
  for (double alpha : {1.5, 2.0, 3.0}) {
    const GeneratingFunction<double> k(alpha);
    EXPECT_EQ(k(0.0), 1.0);
    EXPECT_EQ(k(1 / alpha), 1.0);
    EXPECT_EQ(k(1.0), 0.0);
    EXPECT_EQ(k(2.0), 0.0);
    double prev = 1;
    for (int i = 1; i < 200; ++i) {
      const double t = 1 / alpha + (1 - 1 / alpha) * i / 200.0;
      const double v = k(t);
      EXPECT_LE(v, prev + 1e-15);
      EXPECT_GE(v, 0.0);
      prev = v;
    }
  }
}

// The bump integrand vanishes to all orders at both ends, so k approaches its
// plateau values faster than any power.
TEST(GeneratingFunctionTest, FlatAtEnds) {
  const GeneratingFunction<double> k(2.0);
  EXPECT_GT(k(0.5 + 1e-2), 1 - 1e-10);
  EXPECT_LT(k(1 - 1e-2), 1e-10);
  EXPECT_NEAR(generating_k(2.0, 0.75), 0.5, 0.3);
}

TEST(Params, MaxScale) {
  EXPECT_EQ(WaveletParams<double>(32).J, 5);
  EXPECT_EQ(WaveletParams<double>(33).J, 5);
  EXPECT_EQ(WaveletParams<double>(34).J, 6);
  EXPECT_EQ(WaveletParams<double>(128).J, 7);
  EXPECT_EQ(WaveletParams<double>(2).J, 0);
  EXPECT_EQ(WaveletParams<double>(32, 3.0).J, 4);
  EXPECT_EQ(WaveletParams<double>(128, 2.0, 3).scales(), 5);
}

TEST(Params, Errors) {
  EXPECT_THROW(WaveletParams<double>(32, 1.0), DomainError);
  EXPECT_THROW(WaveletParams<double>(32, 2.0, 6), DomainError);
  EXPECT_THROW(WaveletParams<double>(32, 2.0, -1), DomainError);
  EXPECT_THROW(WaveletParams<double>(1), DomainError);
}

class Tiling : public ::testing::TestWithParam<std::tuple<double, int, int>> {};

TEST_P(Tiling, ResolvesIdentity) {
  const auto [alpha, J0, L] = GetParam();
  const auto bank = build_kernels(WaveletParams<double>(L, alpha, J0));
  const auto a = admissibility(bank);
  for (int l = 0; l < L; ++l) EXPECT_NEAR(a(l), 1.0, 1e-12) << "l=" << l;
}

INSTANTIATE_TEST_SUITE_P(Grid, Tiling,
                         ::testing::Combine(::testing::Values(2.0, 3.0, 1.7), ::testing::Values(0, 2),
                                            ::testing::Values(32, 128, 100)));

TEST(Kernels, CompactSupport) {
  for (double alpha : {2.0, 3.0}) {
    const WaveletParams<double> p(128, alpha, 1);
    const auto bank = build_kernels(p);
    for (int j = p.J0; j <= p.J; ++j)
      for (int l = 0; l < p.L; ++l) {
        const double lo = std::pow(alpha, j - 1), hi = std::pow(alpha, j + 1);
        if (l <= lo || l >= hi) EXPECT_EQ(bank.wavelet(j)(l), 0.0) << "j=" << j << " l=" << l;
      }
    for (int l = 0; l < p.L; ++l)
      if (l >= std::pow(alpha, p.J0)) EXPECT_EQ(bank.scaling(l), 0.0);
  }
}

TEST(Kernels, UnitPeakAtCentralDegree) {
  const WaveletParams<double> p(256);
  const auto bank = build_kernels(p);
  for (int j = 1; j <= p.J; ++j) {
    const int l = 1 << j;
    if (l >= p.L) continue;
    EXPECT_NEAR(bank.wavelet(j)(l) * std::sqrt(4 * std::numbers::pi / (2 * l + 1)), 1.0, 1e-14);
  }
}

TEST(Transform, RoundTrip) {
  for (auto [L, s, alpha, J0] : {std::tuple{128, 0, 2.0, 0}, {128, 2, 2.0, 0}, {64, 1, 3.0, 2}, {33, -2, 1.5, 1}}) {
    Rng rng(L + s);
    const auto f = random_coeffs(L, s, rng, false);
    const auto bank = build_kernels(WaveletParams<double>(L, alpha, J0));
    const auto w = wavelet_analysis(f, bank);
    EXPECT_EQ(w.scaling.spin(), 0);
    EXPECT_EQ(int(w.bands.size()), bank.params.scales());
    EXPECT_LT(max_abs_error(wavelet_synthesis(w, bank, s), f), 1e-10) << "L=" << L << " s=" << s;
  }
}

// W(rho) = <f, R_rho psi>: evaluate the scale-j band at a grid point by integrating the
// signal against the rotated kernel in space.
TEST(Transform, BandMatchesSpatialInnerProduct) {
  const int L = 16;
  Rng rng(4);
  const auto f = random_coeffs(L, 0, rng, false);
  const auto bank = build_kernels(WaveletParams<double>(L));
  const auto w = wavelet_analysis(f, bank);
  const SamplingGrid<double> grid(L);
  const int j = 3;
  for (auto [t, p] : {std::pair{2, 5}, {9, 20}}) {
    const oracle::Vec3 w0 = oracle::direction(grid.theta(t), grid.phi(p));
    auto integrand = [&](long double th, long double ph) {
      const long double mu = oracle::direction(th, ph).dot(w0);
      long double psi = 0;
      for (int l = 0; l < L; ++l)
        psi += bank.wavelet(j)(l) * std::sqrt((2 * l + 1) / (4 * oracle::kPi)) * oracle::legendre(l, 0, mu);
      return oracle::evaluate(f.coeffs(), L, 0, th, ph) * psi;
    };
    const auto ref = oracle::sphere_integral(integrand, 2 * L);
    EXPECT_LT(double(std::abs(oracle::cld(w.band(j)(t, p)) - ref)), 1e-12);
  }
}

TEST(Transform, MismatchErrors) {
  const auto bank = build_kernels(WaveletParams<double>(32));
  EXPECT_THROW(wavelet_analysis(HarmonicCoeffs<double>(16, 0), bank), DomainError);
  auto w = wavelet_analysis(HarmonicCoeffs<double>(32, 0), bank);
  w.bands.pop_back();
  EXPECT_THROW(wavelet_synthesis(w, bank, 0), DomainError);
}
