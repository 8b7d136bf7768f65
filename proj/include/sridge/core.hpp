#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace sridge {

// Error taxonomy. The CLI maps these onto exit codes.

/// Argument outside the mathematical domain of an operation (bad degree, spin, angle...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a structural precondition (e.g. non-axisymmetric kernel).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input carries energy outside the invertible subspace of a transform.
class InadmissibleInput : public PreconditionError {
 public:
  InadmissibleInput(const std::string& what, double odd_fraction)
      : PreconditionError(what), odd_fraction_(odd_fraction) {}
  double odd_fraction() const { return odd_fraction_; }

 private:
  double odd_fraction_;
};

/// Malformed data: wrong shape, truncated file, bad magic.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using VectorXc = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RingMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Real>
inline constexpr Real pi = std::numbers::pi_v<Real>;

/// Band-limit L: harmonic content vanishes for degrees l >= L.
class BandLimit {
 public:
  explicit BandLimit(int L) : L_(L) {
    if (L < 1) throw DomainError("band-limit must be >= 1, got " + std::to_string(L));
  }
  int value() const { return L_; }
  operator int() const { return L_; }

 private:
  int L_;
};

/// Flat index of (l, m) in row-by-degree layout: l(l+1)+m.
inline int lm_index(int l, int m) {
  if (l < 0 || m < -l || m > l)
    throw DomainError("invalid (l, m) = (" + std::to_string(l) + ", " + std::to_string(m) + ")");
  return l * (l + 1) + m;
}

/// Inverse of lm_index.
inline void lm_from_index(int idx, int& l, int& m) {
  l = static_cast<int>(std::sqrt(static_cast<double>(idx)));
  while (l * l > idx) --l;
  while ((l + 1) * (l + 1) <= idx) ++l;
  m = idx - l * (l + 1);
}

inline void check_spin(int L, int spin) {
  if (std::abs(spin) >= L)
    throw DomainError("spin " + std::to_string(spin) + " not representable at band-limit " +
                      std::to_string(L));
}

/// zyz Euler angles. alpha and gamma are wrapped into [0, 2pi); beta must lie in [0, pi].
template <typename Real>
struct EulerAngles {
  Real alpha{0};
  Real beta{0};
  Real gamma{0};

  EulerAngles() = default;
  EulerAngles(Real a, Real b, Real g) : alpha(wrap(a)), beta(b), gamma(wrap(g)) {
    if (!(b >= 0 && b <= pi<Real>))
      throw DomainError("Euler angle beta must lie in [0, pi]");
  }

  /// Angles of the inverse rotation.
  EulerAngles inverse() const { return EulerAngles(pi<Real> - gamma, beta, pi<Real> - alpha); }

 private:
  static Real wrap(Real x) {
    const Real two_pi = 2 * pi<Real>;
    Real r = std::fmod(x, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0;
    return r;
  }
};

/// Worker cap: SRIDGE_THREADS (0 or unset = hardware concurrency).
inline unsigned max_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("SRIDGE_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(i) for i in [0, n) with dynamic scheduling. Body must only touch disjoint state.
template <typename Body>
void parallel_for(int n, Body&& body) {
  const unsigned workers = std::min<unsigned>(max_threads(), static_cast<unsigned>(std::max(n, 0)));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto run = [&] {
    for (int i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace sridge
