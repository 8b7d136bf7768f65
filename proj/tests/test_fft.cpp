#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sridge/fft.hpp"

using namespace sridge;

namespace {

std::vector<oracle::cld> naive_dft(const std::vector<std::complex<double>>& x, int sign) {
  const int n = static_cast<int>(x.size());
  std::vector<oracle::cld> out(n);
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p)
      out[k] += oracle::cld(x[p].real(), x[p].imag()) *
                std::polar(1.0L, sign * 2 * oracle::kPi * ((long long)k * p % n) / n);
  return out;
}

}  // namespace

TEST(RingFftTest, MatchesNaiveDft) {
  std::vector<int> sizes;
  for (int n = 1; n <= 70; ++n) sizes.push_back(n);
  for (int n : {127, 255, 511, 1023, 2047}) sizes.push_back(n);
  for (int n : sizes) {
    std::vector<std::complex<double>> x(n), y;
    for (int i = 0; i < n; ++i) x[i] = {std::sin(1.7 * i + 0.3), std::cos(0.9 * i * i)};
    RingFft<double> fft(n);
    for (int sign : {-1, 1}) {
      sign < 0 ? fft.forward(x, y) : fft.backward(x, y);
      const auto ref = naive_dft(x, sign);
      double err = 0;
      for (int k = 0; k < n; ++k) err = std::max(err, double(std::abs(oracle::cld(y[k]) - ref[k])));
      EXPECT_LE(err, 1e-12 * std::sqrt(double(n))) << "n=" << n << " sign=" << sign;
    }
  }
}

TEST(RingFftTest, PrimeLengthsUseChirpZ) {
  EXPECT_TRUE(RingFft<double>(127).uses_bluestein());
  EXPECT_FALSE(RingFft<double>(63).uses_bluestein());
  EXPECT_EQ(RingFft<double>::prime_factor_sum(1023), 3 + 11 + 31);
  EXPECT_THROW(RingFft<double>(0), DomainError);
}
