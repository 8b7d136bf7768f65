#include "sridge/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "sridge/random.hpp"
#include "sridge/ridgelet.hpp"

namespace sridge::bench {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

constexpr const char* kHeader = "L,max_abs_error,wall_seconds,trials";

}  // namespace

void validate(const BenchOptions& opt) {
  if (!power_of_two(opt.min_L) || !power_of_two(opt.max_L))
    throw DomainError("benchmark band-limits must be powers of two");
  if (opt.min_L < 16) throw DomainError("benchmark minimum band-limit must be at least 16");
  if (opt.min_L > opt.max_L) throw DomainError("benchmark minimum band-limit exceeds maximum");
  if (opt.max_L > opt.ceiling)
    throw DomainError("benchmark maximum band-limit " + std::to_string(opt.max_L) + " exceeds ceiling " +
                      std::to_string(opt.ceiling));
  if (opt.trials < 1) throw DomainError("benchmark needs at least one trial");
}

BenchRecord measure_ridgelet_roundtrip(int L, int trials, int spin, double alpha, int J0, std::uint64_t rng_seed) {
  using clock = std::chrono::steady_clock;
  const RidgeletBank<double> rb = build_ridgelets(WaveletParams<double>(L, alpha, J0), spin);
  Rng rng(rng_seed);
  double err_sum = 0, time_sum = 0;
  for (int t = 0; t < trials; ++t) {
    const HarmonicCoeffs<double> f = random_coeffs(L, spin, rng, true);
    const auto start = clock::now();
    const HarmonicCoeffs<double> back = ridgelet_synthesis(ridgelet_analysis(f, rb), rb);
    time_sum += std::chrono::duration<double>(clock::now() - start).count();
    err_sum += max_abs_error(f, back);
  }
  return {L, err_sum / trials, time_sum / trials, trials};
}

std::vector<BenchRecord> run_ridgelet_bench(const BenchOptions& opt) {
  validate(opt);
  std::vector<BenchRecord> out;
  for (int L = opt.min_L; L <= opt.max_L; L *= 2)
    out.push_back(measure_ridgelet_roundtrip(L, opt.trials, opt.spin, opt.alpha, opt.J0, opt.seed + std::uint64_t(L)));
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs at least two matched points");
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw DomainError("slope fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw DomainError("slope fit needs distinct abscissae");
  return (n * sxy - sx * sy) / den;
}

Slopes fit_slopes(const std::vector<BenchRecord>& records) {
  std::vector<double> L, err, time;
  for (const auto& r : records) {
    L.push_back(r.L);
    err.push_back(r.max_abs_error);
    time.push_back(r.wall_seconds);
  }
  return {loglog_slope(L, err), loglog_slope(L, time)};
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kHeader << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : records) out << r.L << ',' << r.max_abs_error << ',' << r.wall_seconds << ',' << r.trials << '\n';
}

void write_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out, records);
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw FormatError("benchmark CSV: missing or wrong header");
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    BenchRecord r{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(row >> r.L >> c1 >> r.max_abs_error >> c2 >> r.wall_seconds >> c3 >> r.trials) || c1 != ',' || c2 != ',' ||
        c3 != ',' || !(row >> std::ws).eof())
      throw FormatError("benchmark CSV: malformed row '" + line + "'");
    out.push_back(r);
  }
  return out;
}

std::vector<BenchRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_csv(in);
}

}  // namespace sridge::bench
