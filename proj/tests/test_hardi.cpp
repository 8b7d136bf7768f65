#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "sridge/hardi.hpp"

using namespace sridge;
using namespace sridge::hardi;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d grid_direction(const SamplingGrid<double>& g, int t, int p) {
  return {std::sin(g.theta(t)) * std::cos(g.phi(p)), std::sin(g.theta(t)) * std::sin(g.phi(p)), std::cos(g.theta(t))};
}

Eigen::Vector3d principal_axis(const Eigen::Matrix3d& d) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(d);
  return eig.eigenvectors().col(2);
}

}  // namespace

TEST(Phantom, IsotropicIsConstant) {
  const auto map = simulate_hardi(isotropic_config(700), 16);
  const double expect = std::exp(-3000 * 700e-6);
  EXPECT_LT((map.samples().array() - expect).abs().maxCoeff(), 1e-15);
}

TEST(Phantom, RandomConfiguration) {
  const auto cfg = random_fiber_config(42);
  EXPECT_NO_THROW(cfg.validate());
  ASSERT_EQ(cfg.fibers.size(), 3u);
  EXPECT_EQ(cfg.b, 3000.0);
  double sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& f = cfg.fibers[i];
    sum += f.weight;
    // raw weights in [0.25, 0.75] bound every normalised weight
    EXPECT_GE(f.weight, 0.25 / 1.75);
    EXPECT_LE(f.weight, 0.75 / 1.25);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(f.tensor);
    EXPECT_NEAR(eig.eigenvalues()(0), 300, 1e-9);
    EXPECT_NEAR(eig.eigenvalues()(1), 300, 1e-9);
    EXPECT_NEAR(eig.eigenvalues()(2), 1700, 1e-9);
    const double cosang = std::abs(principal_axis(f.tensor).dot(Eigen::Vector3d::Unit(i)));
    EXPECT_GE(cosang, std::cos(10 * kPi / 180) - 1e-12) << "fiber " << i;
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);

  const auto again = random_fiber_config(42);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(again.fibers[i].tensor, cfg.fibers[i].tensor);
  EXPECT_NE(random_fiber_config(43).fibers[0].weight, cfg.fibers[0].weight);
}

TEST(Phantom, Validation) {
  FiberConfig cfg{{{0.5, Eigen::Matrix3d::Identity()}, {0.4, Eigen::Matrix3d::Identity()}}, 3000};
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.fibers[1].weight = 0.5;
  EXPECT_NO_THROW(cfg.validate());
  cfg.fibers[1].tensor(0, 0) = -1;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_THROW(simulate_hardi(cfg, 8), DomainError);
  cfg.fibers[1].tensor = Eigen::Matrix3d::Identity();
  cfg.fibers[1].tensor(0, 1) = 0.1;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.fibers[1].tensor(1, 0) = 0.1;
  EXPECT_NO_THROW(cfg.validate());
  cfg.b = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_THROW(random_fiber_config(1, 0), DomainError);
}

TEST(Phantom, AntipodalSymmetry) {
  const auto cfg = random_fiber_config(7);
  const int L = 32;
  const SamplingGrid<double> grid(L);
  const auto map = simulate_hardi(cfg, L);
  for (int t = 0; t < L; ++t)
    for (int p = 0; p < 2 * L - 1; ++p) {
      const Eigen::Vector3d w = grid_direction(grid, t, p);
      EXPECT_NEAR(hardi_value(cfg, -w), map(t, p).real(), 1e-14);
      EXPECT_EQ(map(t, p).imag(), 0.0);
      EXPECT_GT(map(t, p).real(), 0.0);
    }
  const auto c = sht_forward(map);
  const double peak = c.coeffs().cwiseAbs().maxCoeff();
  for (int l = 1; l < L; l += 2)
    for (int m = -l; m <= l; ++m) EXPECT_LT(std::abs(c(l, m)), 1e-10 * peak);
}

TEST(Odf, ConstantSignal) {
  const int L = 16;
  SphereSignal<double> c(L, 0);
  c.samples().setConstant(0.37);
  const auto odf = compute_odf(c);
  EXPECT_LT((odf.raw.samples().array() - 2 * kPi * 0.37).abs().maxCoeff(), 1e-13);
  EXPECT_EQ(odf.normalised.samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Odf, NormalisedRangeAndAntipodality) {
  const auto map = simulate_hardi(random_fiber_config(42), 32);
  const auto odf = compute_odf(map);
  const auto& n = odf.normalised.samples();
  EXPECT_DOUBLE_EQ(n.real().minCoeff(), 0.0);
  EXPECT_DOUBLE_EQ(n.real().maxCoeff(), 1.0);
  const auto c = sht_forward(odf.raw);
  const double peak = c.coeffs().cwiseAbs().maxCoeff();
  for (int l = 1; l < 32; l += 2)
    for (int m = -l; m <= l; ++m) EXPECT_LT(std::abs(c(l, m)), 1e-9 * peak);
}

// Raw ODF against direct integration of the phantom over great circles.
TEST(Odf, MatchesGreatCircleIntegration) {
  const auto cfg = random_fiber_config(5);
  const int L = 48;
  const auto odf = compute_odf(simulate_hardi(cfg, L));
  const SamplingGrid<double> grid(L);
  for (auto [t, p] : {std::pair{3, 10}, {20, 40}, {44, 90}}) {
    const Eigen::Vector3d w = grid_direction(grid, t, p);
    const auto ref = oracle::great_circle_integral(
        [&](const oracle::Vec3& v) { return oracle::cld(hardi_value(cfg, v.cast<double>())); }, w.cast<long double>());
    EXPECT_NEAR(odf.raw(t, p).real(), double(ref.real()), 1e-6);
  }
}

TEST(Odf, SingleFiberPeaksAtFiberAxis) {
  FiberConfig cfg = random_fiber_config(11, 1);
  const Eigen::Vector3d axis = principal_axis(cfg.fibers[0].tensor);
  const int L = 32;
  const SamplingGrid<double> grid(L);
  const auto odf = compute_odf(simulate_hardi(cfg, L));
  Eigen::Index t, p;
  odf.raw.samples().real().maxCoeff(&t, &p);
  const Eigen::Vector3d best = grid_direction(grid, int(t), int(p));
  const double angle = std::acos(std::min(1.0, std::abs(best.dot(axis))));
  const double cell = kPi / L;  // ring spacing; longitude spacing is finer except near the poles
  EXPECT_LE(angle, cell);
}

TEST(Odf, BandLimitConvergence) {
  const auto cfg = random_fiber_config(42);
  const auto lo = sht_forward(compute_odf(simulate_hardi(cfg, 24)).raw);
  const auto hi = sht_forward(compute_odf(simulate_hardi(cfg, 48)).raw);
  double diff = 0, tail = 0;
  for (int l = 0; l < 24; ++l)
    for (int m = -l; m <= l; ++m) diff = std::max(diff, std::abs(lo(l, m) - hi(l, m)));
  for (int l = 22; l < 24; ++l)
    for (int m = -l; m <= l; ++m) tail = std::max(tail, std::abs(hi(l, m)));
  // aliasing error of the truncated transform is of the order of the discarded tail
  EXPECT_LT(diff, 1e-6);
  EXPECT_LT(diff, 100 * tail + 1e-14);
}

TEST(Sparsity, GiniAndTopFraction) {
  const std::vector<double> spike{0, 0, 0, 1};
  EXPECT_NEAR(gini_index(spike), 0.75, 1e-15);
  const std::vector<double> flat(10, 2.0);
  EXPECT_NEAR(gini_index(flat), 0.0, 1e-15);
  EXPECT_EQ(gini_index(std::vector<double>(5, 0.0)), 0.0);
  EXPECT_NEAR(gini_index(std::vector<double>{0, 0, 0, -1}), 0.75, 1e-15);

  std::vector<double> v(200, 1.0);
  v[17] = 10;
  v[3] = 5;
  // top 1% of 200 is 2 entries
  EXPECT_NEAR(top_fraction_energy(v), 125.0 / (125 + 198), 1e-15);
  EXPECT_EQ(top_fraction_energy(std::vector<double>(4, 0.0)), 1.0);
}

TEST(Sparsity, ZeroSignalIsDegenerate) {
  const auto r = sparsity_compare(SphereSignal<double>(16, 0), WaveletParams<double>(16));
  for (const auto& b : r.bands) {
    EXPECT_TRUE(b.degenerate);
    EXPECT_EQ(b.gini, 0.0);
    EXPECT_EQ(b.top_fraction_energy, 1.0);
  }
  EXPECT_TRUE(r.wavelet_trivial);
  EXPECT_TRUE(r.ridgelet_trivial);
}

TEST(Sparsity, IsotropicPhantomIsTrivial) {
  const auto r = sparsity_compare(simulate_hardi(isotropic_config(500), 32), WaveletParams<double>(32));
  EXPECT_TRUE(r.wavelet_trivial);
  EXPECT_TRUE(r.ridgelet_trivial);
  EXPECT_FALSE(r.find("wavelet", -1).degenerate);
  EXPECT_FALSE(r.find("ridgelet", -1).degenerate);
}

TEST(Sparsity, ReportShape) {
  const int L = 64;
  const auto r = sparsity_compare(simulate_hardi(random_fiber_config(3), L), WaveletParams<double>(L));
  const int J = WaveletParams<double>(L).J;
  EXPECT_EQ(int(r.bands.size()), 2 * (J + 2));
  for (const auto& b : r.bands) {
    EXPECT_GE(b.gini, 0.0);
    EXPECT_LE(b.gini, 1.0);
    EXPECT_GT(b.top_fraction_energy, 0.0);
    EXPECT_LE(b.top_fraction_energy, 1.0);
    ASSERT_EQ(int(b.counts.size()), kHistogramBins);
    ASSERT_EQ(int(b.bin_edges.size()), kHistogramBins + 1);
    EXPECT_EQ(std::accumulate(b.counts.begin(), b.counts.end(), std::size_t(0)), std::size_t(L * (2 * L - 1)));
    if (!b.degenerate)
      for (int k = 0; k < kHistogramBins; ++k) EXPECT_LE(b.bin_edges[k], b.bin_edges[k + 1]);
  }
  EXPECT_THROW(r.find("curvelet", 0), DomainError);
  EXPECT_THROW(sparsity_compare(SphereSignal<double>(16, 0), WaveletParams<double>(32)), DomainError);
}

TEST(Sparsity, RidgeletsSparserForThreeFiberPhantom) {
  const int L = 128;
  const auto r = sparsity_compare(simulate_hardi(random_fiber_config(42), L), WaveletParams<double>(L));
  const auto& w = r.find("wavelet", 4);
  const auto& g = r.find("ridgelet", 4);
  EXPECT_GT(g.gini, w.gini);
  EXPECT_GT(g.top_fraction_energy, w.top_fraction_energy);
}
