#pragma once

#include <cstdint>
#include <random>

#include "sridge/harmonic.hpp"

namespace sridge {

/// Seeded 64-bit generator with a platform-independent mapping to doubles
/// (std distributions are implementation-defined, which would break golden files).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients with real and imaginary parts uniform in [-1, 1]. With antipodal set,
/// entries with l + s odd are zeroed so the signal lies in the invertible Radon subspace.
inline HarmonicCoeffs<double> random_coeffs(int L, int spin, Rng& rng, bool antipodal) {
  HarmonicCoeffs<double> c(L, spin);
  for (int l = std::abs(spin); l < L; ++l) {
    const bool keep = !antipodal || ((l + spin) % 2 == 0);
    for (int m = -l; m <= l; ++m) {
      const double re = rng.uniform(-1, 1);
      const double im = rng.uniform(-1, 1);
      if (keep) c(l, m) = {re, im};
    }
  }
  return c;
}

}  // namespace sridge
