#include "sridge/hardi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sridge/random.hpp"

namespace sridge::hardi {

namespace {

Eigen::Vector3d unit_vector(const SamplingGrid<double>& grid, int t, int p) {
  const double th = grid.theta(t), ph = grid.phi(p);
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

// Relative energy below which a band counts as empty.
constexpr double kDegenerateEnergy = 1e-20;

BandSparsity summarise(const std::string& rep, int j, const SphereSignal<double>& band, double total_energy) {
  std::vector<double> mags;
  mags.reserve(band.samples().size());
  double energy = 0;
  for (int t = 0; t < band.rings(); ++t)
    for (int p = 0; p < band.longitudes(); ++p) {
      const double a = std::abs(band(t, p));
      mags.push_back(a);
      energy += a * a;
    }
  BandSparsity out;
  out.representation = rep;
  out.j = j;
  out.energy = energy;
  out.degenerate = !(energy > kDegenerateEnergy * total_energy) || energy == 0;
  if (out.degenerate) {
    out.gini = 0;
    out.top_fraction_energy = 1;
  } else {
    out.gini = gini_index(mags);
    out.top_fraction_energy = top_fraction_energy(mags);
  }

  const double hi = *std::max_element(mags.begin(), mags.end());
  double lo = hi;
  for (double a : mags)
    if (a > 0) lo = std::min(lo, a);
  lo = std::max(lo, hi * 1e-12);
  out.bin_edges.resize(kHistogramBins + 1);
  out.counts.assign(kHistogramBins, 0);
  if (hi <= 0) {
    std::fill(out.bin_edges.begin(), out.bin_edges.end(), 0.0);
    out.counts[0] = mags.size();
    return out;
  }
  const double log_lo = std::log10(lo), log_hi = std::log10(hi);
  const double width = (log_hi - log_lo) / kHistogramBins;
  for (int b = 0; b <= kHistogramBins; ++b) out.bin_edges[b] = std::pow(10.0, log_lo + b * width);
  out.bin_edges.back() = hi;
  for (double a : mags) {
    int b = 0;
    if (a > lo && width > 0) b = static_cast<int>((std::log10(a) - log_lo) / width);
    out.counts[std::clamp(b, 0, kHistogramBins - 1)]++;
  }
  return out;
}

void append_bands(SparsityReport& report, const std::string& rep, const MultiScaleCoeffs<double>& w, bool& trivial) {
  double total = 0;
  auto band_energy = [](const SphereSignal<double>& s) { return s.samples().squaredNorm(); };
  total += band_energy(w.scaling);
  for (const auto& b : w.bands) total += band_energy(b);
  report.bands.push_back(summarise(rep, -1, w.scaling, total));
  trivial = true;
  for (int j = w.params.J0; j <= w.params.J; ++j) {
    report.bands.push_back(summarise(rep, j, w.band(j), total));
    trivial = trivial && report.bands.back().degenerate;
  }
}

}  // namespace

void FiberConfig::validate() const {
  if (fibers.empty()) throw DomainError("fiber configuration has no fibers");
  if (!(b > 0)) throw DomainError("acquisition constant b must be positive");
  double sum = 0;
  for (const auto& f : fibers) {
    if (!(f.weight > 0 && f.weight <= 1)) throw DomainError("fiber weight must lie in (0, 1]");
    sum += f.weight;
    const double scale = f.tensor.cwiseAbs().maxCoeff();
    if (!((f.tensor - f.tensor.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale))
      throw DomainError("diffusion tensor is not symmetric");
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(f.tensor, Eigen::EigenvaluesOnly);
    if (!(eig.eigenvalues().minCoeff() > 0)) throw DomainError("diffusion tensor is not positive-definite");
  }
  if (std::abs(sum - 1) > 1e-12) throw DomainError("fiber weights must sum to one");
}

FiberConfig random_fiber_config(std::uint64_t seed, int n_fibers, double b) {
  if (n_fibers < 1) throw DomainError("need at least one fiber");
  Rng rng(seed);
  const Eigen::Matrix3d base = Eigen::Vector3d(1700, 300, 300).asDiagonal();

  std::vector<double> weights(n_fibers);
  for (auto& w : weights) w = rng.uniform(0.25, 0.75);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  FiberConfig cfg{{}, b};
  for (int i = 0; i < n_fibers; ++i) {
    const int a = i % 3;
    const Eigen::Vector3d e0 = Eigen::Vector3d::Unit(a);
    const Eigen::Vector3d e1 = Eigen::Vector3d::Unit((a + 1) % 3);
    const Eigen::Vector3d e2 = Eigen::Vector3d::Unit((a + 2) % 3);
    Eigen::Matrix3d align;  // cyclic permutation taking x onto axis a
    align << e0, e1, e2;

    const double tilt = rng.uniform(0.0, 10.0) * std::numbers::pi / 180.0;
    const double azimuth = rng.uniform(0.0, 2 * std::numbers::pi);
    const Eigen::Vector3d axis = std::cos(azimuth) * e1 + std::sin(azimuth) * e2;
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(tilt, axis).toRotationMatrix() * align;

    Eigen::Matrix3d d = rot * base * rot.transpose();
    d = 0.5 * (d + d.transpose()).eval();
    cfg.fibers.push_back({weights[i] / total, d});
  }
  return cfg;
}

FiberConfig isotropic_config(double diffusivity, double b) {
  return FiberConfig{{{1.0, diffusivity * Eigen::Matrix3d::Identity()}}, b};
}

double hardi_value(const FiberConfig& cfg, const Eigen::Vector3d& dir) {
  double s = 0;
  for (const auto& f : cfg.fibers) s += f.weight * std::exp(-cfg.b * kTensorUnit * dir.dot(f.tensor * dir));
  return s;
}

SphereSignal<double> simulate_hardi(const FiberConfig& cfg, int L) {
  cfg.validate();
  const SamplingGrid<double> grid(L);
  SphereSignal<double> out(L, 0);
  for (int t = 0; t < out.rings(); ++t)
    for (int p = 0; p < out.longitudes(); ++p) out(t, p) = hardi_value(cfg, unit_vector(grid, t, p));
  return out;
}

Odf compute_odf(const SphereSignal<double>& hardi) {
  if (hardi.spin() != 0) throw DomainError("compute_odf expects a scalar HARDI map");
  const ShtPlan<double> plan(hardi.L(), 0);
  SphereSignal<double> raw = plan.inverse(radon_forward(plan.forward(hardi)));

  SphereSignal<double> norm(hardi.L(), 0);
  const Eigen::MatrixXd re = raw.samples().real();
  const double lo = re.minCoeff(), hi = re.maxCoeff();
  // a spread at rounding level is a constant map; stretching it would display noise
  if (hi - lo > 1e-12 * std::max(std::abs(hi), std::abs(lo))) norm.samples() = ((re.array() - lo) / (hi - lo)).matrix().cast<std::complex<double>>();
  return {std::move(raw), std::move(norm)};
}

double gini_index(std::span<const double> magnitudes) {
  const std::size_t n = magnitudes.size();
  if (n == 0) return 0;
  std::vector<double> c(magnitudes.begin(), magnitudes.end());
  for (auto& v : c) v = std::abs(v);
  std::sort(c.begin(), c.end());
  const double l1 = std::accumulate(c.begin(), c.end(), 0.0);
  if (l1 == 0) return 0;
  // G = 1 - 2 sum_k (c_(k) / |c|_1) (n - k + 1/2) / n, k = 1..n over ascending order
  double acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += c[k] / l1 * (double(n - (k + 1)) + 0.5) / double(n);
  return std::clamp(1 - 2 * acc, 0.0, 1.0);
}

double top_fraction_energy(std::span<const double> magnitudes, double fraction) {
  const std::size_t n = magnitudes.size();
  if (n == 0) return 1;
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = magnitudes[i] * magnitudes[i];
  const double total = std::accumulate(e.begin(), e.end(), 0.0);
  if (total == 0) return 1;
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * double(n))));
  std::nth_element(e.begin(), e.begin() + (k - 1), e.end(), std::greater<>());
  const double top = std::accumulate(e.begin(), e.begin() + k, 0.0);
  return std::min(1.0, top / total);
}

const BandSparsity& SparsityReport::find(const std::string& representation, int j) const {
  for (const auto& b : bands)
    if (b.representation == representation && b.j == j) return b;
  throw DomainError("no band " + representation + "/" + std::to_string(j) + " in sparsity report");
}

SparsityReport sparsity_compare(const SphereSignal<double>& hardi, const WaveletParams<double>& params) {
  if (hardi.spin() != 0) throw DomainError("sparsity_compare expects a scalar HARDI map");
  if (hardi.L() != params.L) throw DomainError("sparsity_compare: band-limit mismatch");
  const HarmonicCoeffs<double> f = sht_forward(hardi);
  const RidgeletBank<double> rb = build_ridgelets(params, 0);

  SparsityReport report;
  append_bands(report, "wavelet", wavelet_analysis(f, rb.bank), report.wavelet_trivial);
  append_bands(report, "ridgelet", ridgelet_analysis(f, rb), report.ridgelet_trivial);
  return report;
}

}  // namespace sridge::hardi
