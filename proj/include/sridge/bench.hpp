#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace sridge::bench {

struct BenchRecord {
  int L;
  double max_abs_error;  // mean over trials of the per-trial max coefficient error
  double wall_seconds;   // mean forward + inverse ridgelet time per trial
  int trials;
};

struct BenchOptions {
  int min_L = 32;
  int max_L = 256;
  int trials = 10;
  int spin = 0;
  double alpha = 2;
  int J0 = 0;
  std::uint64_t seed = 42;
  int ceiling = 1024;  // largest L accepted
};

/// Throws DomainError unless min_L, max_L are powers of two with 16 <= min_L <= max_L <= ceiling.
void validate(const BenchOptions& opt);

/// Round-trip ridgelet benchmark over L = min_L, 2 min_L, ..., max_L.
std::vector<BenchRecord> run_ridgelet_bench(const BenchOptions& opt);

/// Single band-limit measurement; rng_seed picks the random signals.
BenchRecord measure_ridgelet_roundtrip(int L, int trials, int spin, double alpha, int J0, std::uint64_t rng_seed);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct Slopes {
  double error;
  double time;
};
Slopes fit_slopes(const std::vector<BenchRecord>& records);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_csv(std::istream& in);
std::vector<BenchRecord> read_csv(const std::filesystem::path& path);

}  // namespace sridge::bench
