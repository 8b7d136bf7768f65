#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "sridge/bench.hpp"
#include "sridge/hardi.hpp"
#include "sridge/io.hpp"
#include "sridge/random.hpp"
#include "sridge/sridge.hpp"

namespace fs = std::filesystem;
using namespace sridge;

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kMalformed = 2, kPrecondition = 3 };

enum class Format { binary, csv };

struct TransformFlags {
  std::string in, out;
  std::optional<int> lmax;
  std::optional<int> spin;
  double alpha = 2;
  int j0 = 0;
  ParityPolicy parity = ParityPolicy::strict;
  Format format = Format::binary;
};

void check_lmax(const TransformFlags& f, int L) {
  if (f.lmax && *f.lmax != L)
    throw PreconditionError("--lmax " + std::to_string(*f.lmax) + " does not match input band-limit " +
                            std::to_string(L));
}

void save(const fs::path& path, const HarmonicCoeffs<double>& c, Format fmt) {
  fmt == Format::csv ? io::write_coeffs_csv(path, c) : io::write_coeffs(path, c);
}

void save(const fs::path& path, const SphereSignal<double>& m, Format fmt) {
  fmt == Format::csv ? io::write_map_csv(path, m) : io::write_map(path, m);
}

std::string band_path(const std::string& prefix, int j) { return prefix + ".j" + std::to_string(j); }

void save_bands(const std::string& prefix, const MultiScaleCoeffs<double>& w, Format fmt) {
  save(prefix + ".scal", w.scaling, fmt);
  for (int j = w.params.J0; j <= w.params.J; ++j) save(band_path(prefix, j), w.band(j), fmt);
}

MultiScaleCoeffs<double> load_bands(const std::string& prefix, const TransformFlags& f) {
  SphereSignal<double> scal = io::read_map(fs::path(prefix + ".scal"));
  check_lmax(f, scal.L());
  const WaveletParams<double> params(scal.L(), f.alpha, f.j0);
  MultiScaleCoeffs<double> w{params, std::move(scal), {}};
  for (int j = params.J0; j <= params.J; ++j) {
    SphereSignal<double> band = io::read_map(fs::path(band_path(prefix, j)));
    if (band.L() != params.L) throw FormatError(band_path(prefix, j) + ": band-limit differs from scaling band");
    w.bands.push_back(std::move(band));
  }
  return w;
}

int run_transform(const std::string& kind, const TransformFlags& f) {
  if (kind == "sht") {
    const auto map = io::read_map(fs::path(f.in));
    check_lmax(f, map.L());
    save(f.out, sht_forward(map), f.format);
  } else if (kind == "isht") {
    const auto c = io::read_coeffs(fs::path(f.in));
    check_lmax(f, c.L());
    save(f.out, sht_inverse(c), f.format);
  } else if (kind == "radon") {
    const auto c = io::read_coeffs(fs::path(f.in));
    check_lmax(f, c.L());
    save(f.out, radon_forward(c), f.format);
  } else if (kind == "iradon") {
    const auto c = io::read_coeffs(fs::path(f.in));
    check_lmax(f, c.L());
    save(f.out, radon_inverse(c, f.spin.value_or(0), f.parity), f.format);
  } else if (kind == "wavelet") {
    const auto c = io::read_coeffs(fs::path(f.in));
    check_lmax(f, c.L());
    const auto bank = build_kernels(WaveletParams<double>(c.L(), f.alpha, f.j0));
    save_bands(f.out, wavelet_analysis(c, bank), f.format);
  } else if (kind == "iwavelet") {
    const auto w = load_bands(f.in, f);
    save(f.out, wavelet_synthesis(w, build_kernels(w.params), f.spin.value_or(0)), f.format);
  } else if (kind == "ridgelet") {
    const auto c = io::read_coeffs(fs::path(f.in));
    check_lmax(f, c.L());
    const auto rb = build_ridgelets(WaveletParams<double>(c.L(), f.alpha, f.j0), c.spin());
    save_bands(f.out, ridgelet_analysis(c, rb), f.format);
  } else {  // iridgelet
    const auto g = load_bands(f.in, f);
    const auto rb = build_ridgelets(g.params, f.spin.value_or(0));
    save(f.out, ridgelet_synthesis(g, rb, f.parity), f.format);
  }
  return kOk;
}

void print_slopes(const std::vector<bench::BenchRecord>& records) {
  if (records.size() < 2) {
    std::cout << "error_slope=nan\ntime_slope=nan\n";
    return;
  }
  const auto s = bench::fit_slopes(records);
  std::cout << std::setprecision(6) << "error_slope=" << s.error << "\ntime_slope=" << s.time << '\n';
}

struct HardiFlags {
  std::string sub;
  std::uint64_t seed = 42;
  int lmax = 128;
  int fibers = 3;
  double b = 3000;
  std::string prefix = "hardi";
  std::string in;
  double alpha = 2;
  int j0 = 0;
};

SphereSignal<double> hardi_input(const HardiFlags& h) {
  if (!h.in.empty()) return io::read_map(fs::path(h.in));
  return hardi::simulate_hardi(hardi::random_fiber_config(h.seed, h.fibers, h.b), h.lmax);
}

void write_sparsity(const std::string& prefix, const hardi::SparsityReport& r) {
  std::ofstream summary(prefix + ".sparsity.csv");
  std::ofstream hist(prefix + ".hist.csv");
  if (!summary || !hist) throw std::runtime_error("cannot write sparsity outputs under " + prefix);
  summary << std::setprecision(std::numeric_limits<double>::max_digits10);
  hist << std::setprecision(std::numeric_limits<double>::max_digits10);
  summary << "representation,j,gini,top1pct_energy,energy,degenerate\n";
  hist << "representation,j,bin,lower,upper,count\n";
  for (const auto& b : r.bands) {
    const std::string j = b.j < 0 ? "scal" : std::to_string(b.j);
    summary << b.representation << ',' << j << ',' << b.gini << ',' << b.top_fraction_energy << ',' << b.energy << ','
            << (b.degenerate ? 1 : 0) << '\n';
    for (std::size_t k = 0; k < b.counts.size(); ++k)
      hist << b.representation << ',' << j << ',' << k << ',' << b.bin_edges[k] << ',' << b.bin_edges[k + 1] << ','
           << b.counts[k] << '\n';
  }
}

int run_hardi(const HardiFlags& h) {
  if (h.sub == "sim") {
    io::write_map(fs::path(h.prefix + ".hardi.smap"), hardi_input(h));
  } else if (h.sub == "odf") {
    const auto odf = hardi::compute_odf(hardi_input(h));
    io::write_map(fs::path(h.prefix + ".odf_raw.smap"), odf.raw);
    io::write_map(fs::path(h.prefix + ".odf_norm.smap"), odf.normalised);
  } else {
    const auto map = hardi_input(h);
    const auto report = hardi::sparsity_compare(map, WaveletParams<double>(map.L(), h.alpha, h.j0));
    write_sparsity(h.prefix, report);
    if (report.wavelet_trivial) std::cerr << "note: wavelet bands carry negligible energy\n";
    if (report.ridgelet_trivial) std::cerr << "note: ridgelet bands carry negligible energy\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical harmonic, Radon, wavelet and ridgelet transforms on the sphere"};
  app.require_subcommand(1);

  const std::map<std::string, ParityPolicy> parity_map{{"strict", ParityPolicy::strict},
                                                       {"project", ParityPolicy::project}};
  const std::map<std::string, Format> format_map{{"binary", Format::binary}, {"csv", Format::csv}};

  TransformFlags tf;
  std::string transform_kind;
  for (const char* kind : {"sht", "isht", "radon", "iradon", "wavelet", "iwavelet", "ridgelet", "iridgelet"}) {
    auto* cmd = app.add_subcommand(kind, std::string(kind) + " transform");
    cmd->add_option("input", tf.in, "input file (band prefix for inverse multi-scale transforms)")->required();
    cmd->add_option("output", tf.out, "output file (band prefix for forward multi-scale transforms)")->required();
    cmd->add_option("--lmax", tf.lmax, "expected band-limit L");
    cmd->add_option("--spin", tf.spin, "target spin for inverse transforms");
    cmd->add_option("--alpha", tf.alpha, "dilation parameter")->capture_default_str();
    cmd->add_option("--j0", tf.j0, "minimum wavelet scale")->capture_default_str();
    cmd->add_option("--parity", tf.parity, "odd-parity handling: strict or project")
        ->transform(CLI::CheckedTransformer(parity_map, CLI::ignore_case));
    cmd->add_option("--format", tf.format, "output format: binary or csv")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    cmd->callback([&transform_kind, kind] { transform_kind = kind; });
  }

  std::string random_out;
  int random_L = 32, random_spin = 0;
  std::uint64_t random_seed = 42;
  bool antipodal = false;
  auto* random_cmd = app.add_subcommand("random", "write random coefficients uniform in [-1, 1]");
  random_cmd->add_option("output", random_out)->required();
  random_cmd->add_option("--lmax", random_L)->capture_default_str();
  random_cmd->add_option("--spin", random_spin)->capture_default_str();
  random_cmd->add_option("--seed", random_seed)->capture_default_str();
  random_cmd->add_flag("--antipodal", antipodal, "zero entries with l + s odd");

  bench::BenchOptions bo;
  std::string bench_out;
  bool bench_large = false;
  auto* bench_cmd = app.add_subcommand("bench", "ridgelet round-trip accuracy and timing sweep");
  bench_cmd->add_option("min_L", bo.min_L)->required();
  bench_cmd->add_option("max_L", bo.max_L)->required();
  bench_cmd->add_option("--trials", bo.trials)->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV output path (default: standard output)");
  bench_cmd->add_option("--seed", bo.seed)->capture_default_str();
  bench_cmd->add_option("--spin", bo.spin)->capture_default_str();
  bench_cmd->add_option("--alpha", bo.alpha)->capture_default_str();
  bench_cmd->add_option("--j0", bo.J0)->capture_default_str();
  bench_cmd->add_flag("--large", bench_large, "raise the band-limit ceiling from 256 to 1024");

  HardiFlags hf;
  auto* hardi_cmd = app.add_subcommand("hardi", "diffusion MRI phantom, ODF and sparsity comparison");
  hardi_cmd->add_option("subcommand", hf.sub)->required()->check(CLI::IsMember({"sim", "odf", "sparsity"}));
  hardi_cmd->add_option("--seed", hf.seed)->capture_default_str();
  hardi_cmd->add_option("--lmax", hf.lmax)->capture_default_str();
  hardi_cmd->add_option("--fibers", hf.fibers)->capture_default_str();
  hardi_cmd->add_option("--b", hf.b, "acquisition constant in s/mm^2")->capture_default_str();
  hardi_cmd->add_option("--out-prefix", hf.prefix)->capture_default_str();
  hardi_cmd->add_option("--in", hf.in, "use this map instead of simulating a phantom");
  hardi_cmd->add_option("--alpha", hf.alpha)->capture_default_str();
  hardi_cmd->add_option("--j0", hf.j0)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (!transform_kind.empty()) return run_transform(transform_kind, tf);
    if (random_cmd->parsed()) {
      Rng rng(random_seed);
      io::write_coeffs(fs::path(random_out), random_coeffs(random_L, random_spin, rng, antipodal));
      return kOk;
    }
    if (bench_cmd->parsed()) {
      bo.ceiling = bench_large ? 1024 : 256;
      const auto records = bench::run_ridgelet_bench(bo);
      if (bench_out.empty())
        bench::write_csv(std::cout, records);
      else
        bench::write_csv(fs::path(bench_out), records);
      print_slopes(records);
      return kOk;
    }
    return run_hardi(hf);
  } catch (const FormatError& e) {
    std::cerr << "sridge: malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const InadmissibleInput& e) {
    std::cerr << "sridge: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "sridge: precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "sridge: invalid argument: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "sridge: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
