#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sridge/ridgelet.hpp"

namespace sridge::hardi {

/// Diffusion tensor entries are in units of 1e-6 mm^2/s, b in s/mm^2.
inline constexpr double kTensorUnit = 1e-6;

struct Fiber {
  double weight;
  Eigen::Matrix3d tensor;
};

/// Multi-tensor phantom S(w) = sum_i p_i exp(-b w^T D_i w).
struct FiberConfig {
  std::vector<Fiber> fibers;
  double b;

  /// Throws DomainError unless weights sum to one and every tensor is symmetric positive-definite.
  void validate() const;
};

/// Phantom with n fibers: base tensor diag(1700, 300, 300), fiber i aligned with
/// coordinate axis i (mod 3) then tilted by an angle uniform in [0, 10] degrees about a
/// random axis perpendicular to it. Weights are drawn in [0.25, 0.75] and normalised.
FiberConfig random_fiber_config(std::uint64_t seed, int n_fibers = 3, double b = 3000.0);

/// Same tensor layout but isotropic: D = d I for every fiber.
FiberConfig isotropic_config(double diffusivity, double b = 3000.0);

/// Samples the phantom on the band-limit-L grid (spin 0, real).
SphereSignal<double> simulate_hardi(const FiberConfig& cfg, int L);

/// Evaluates the phantom at a unit direction.
double hardi_value(const FiberConfig& cfg, const Eigen::Vector3d& dir);

struct Odf {
  SphereSignal<double> raw;         // Funk-Radon transform of the HARDI signal
  SphereSignal<double> normalised;  // real part of raw, min-max scaled to [0, 1]; all zero if raw is constant
};

/// ODF as the spherical Radon transform of a scalar HARDI map.
Odf compute_odf(const SphereSignal<double>& hardi);

/// Gini index of |values| (0 for an all-zero input).
double gini_index(std::span<const double> magnitudes);

/// Share of sum |v|^2 held by the largest ceil(fraction * n) entries.
double top_fraction_energy(std::span<const double> magnitudes, double fraction = 0.01);

inline constexpr int kHistogramBins = 50;

struct BandSparsity {
  std::string representation;  // "wavelet" or "ridgelet"
  int j;                       // scale, or -1 for the scaling band
  double gini;
  double top_fraction_energy;
  double energy;
  bool degenerate;  // negligible energy; gini reported as 0
  std::vector<double> bin_edges;     // kHistogramBins + 1 log-spaced edges
  std::vector<std::size_t> counts;   // kHistogramBins counts
};

struct SparsityReport {
  std::vector<BandSparsity> bands;
  bool wavelet_trivial;   // every wavelet band degenerate
  bool ridgelet_trivial;  // every ridgelet band degenerate

  const BandSparsity& find(const std::string& representation, int j) const;
};

/// Wavelet and ridgelet decompositions of the HARDI map compared band by band.
SparsityReport sparsity_compare(const SphereSignal<double>& hardi, const WaveletParams<double>& params);

}  // namespace sridge::hardi
