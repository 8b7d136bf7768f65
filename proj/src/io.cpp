#include "sridge/io.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <limits>

namespace sridge::io {

namespace {

constexpr char kCoeffMagic[5] = {'S', 'S', 'H', 'C', '1'};
constexpr char kMapMagic[5] = {'S', 'M', 'A', 'P', '1'};

// Cap on L accepted from a header before any allocation happens.
constexpr std::uint32_t kMaxBandLimit = 8192;

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void read_exact(std::istream& in, char* dst, std::size_t n, const char* what) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw FormatError(std::string("truncated file while reading ") + what);
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  std::array<unsigned char, 4> b;
  read_exact(in, reinterpret_cast<char*>(b.data()), b.size(), what);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  std::array<unsigned char, 8> b;
  read_exact(in, reinterpret_cast<char*>(b.data()), b.size(), "payload");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

struct Header {
  int L;
  int spin;
};

void write_header(std::ostream& out, const char (&magic)[5], int L, int spin) {
  out.write(magic, 5);
  put_u32(out, static_cast<std::uint32_t>(L));
  put_u32(out, static_cast<std::uint32_t>(static_cast<std::int32_t>(spin)));
}

Header read_header(std::istream& in, const char (&magic)[5], const char* kind) {
  char got[5];
  read_exact(in, got, 5, "magic");
  if (std::memcmp(got, magic, 5) != 0) throw FormatError(std::string("bad magic: not a ") + kind + " file");
  const std::uint32_t L = get_u32(in, "band-limit");
  const auto spin = static_cast<std::int32_t>(get_u32(in, "spin"));
  if (L < 1 || L > kMaxBandLimit) throw FormatError("band-limit " + std::to_string(L) + " out of range");
  if (std::abs(static_cast<long>(spin)) >= static_cast<long>(L))
    throw FormatError("spin " + std::to_string(spin) + " invalid for band-limit " + std::to_string(L));
  return {static_cast<int>(L), static_cast<int>(spin)};
}

void expect_eof(std::istream& in) {
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after payload");
}

void check_size(const std::filesystem::path& path, std::uint64_t expected) {
  const auto actual = std::filesystem::file_size(path);
  if (actual != expected)
    throw FormatError(path.string() + ": file size " + std::to_string(actual) + " does not match header (expected " +
                      std::to_string(expected) + ")");
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

// Opens the file only to read L from its header.
int peek_band_limit(const std::filesystem::path& path, const char (&magic)[5], const char* kind) {
  auto in = open_in(path);
  return read_header(in, magic, kind).L;
}

}  // namespace

std::uint64_t coeff_file_size(int L) { return kHeaderBytes + 16ull * std::uint64_t(L) * std::uint64_t(L); }
std::uint64_t map_file_size(int L) { return kHeaderBytes + 16ull * std::uint64_t(L) * std::uint64_t(2 * L - 1); }

void write_coeffs(std::ostream& out, const HarmonicCoeffs<double>& c) {
  write_header(out, kCoeffMagic, c.L(), c.spin());
  for (Eigen::Index i = 0; i < c.coeffs().size(); ++i) {
    put_f64(out, c.coeffs()(i).real());
    put_f64(out, c.coeffs()(i).imag());
  }
}

HarmonicCoeffs<double> read_coeffs(std::istream& in) {
  const Header h = read_header(in, kCoeffMagic, "coefficient");
  VectorXc<double> data(Eigen::Index(h.L) * h.L);
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    data(i) = {re, im};
  }
  expect_eof(in);
  try {
    return HarmonicCoeffs<double>(h.L, h.spin, std::move(data));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

void write_map(std::ostream& out, const SphereSignal<double>& f) {
  write_header(out, kMapMagic, f.L(), f.spin());
  for (int t = 0; t < f.rings(); ++t)
    for (int p = 0; p < f.longitudes(); ++p) {
      put_f64(out, f(t, p).real());
      put_f64(out, f(t, p).imag());
    }
}

SphereSignal<double> read_map(std::istream& in) {
  const Header h = read_header(in, kMapMagic, "map");
  SphereSignal<double> f(h.L, h.spin);
  for (int t = 0; t < f.rings(); ++t)
    for (int p = 0; p < f.longitudes(); ++p) {
      const double re = get_f64(in);
      const double im = get_f64(in);
      f(t, p) = {re, im};
    }
  expect_eof(in);
  return f;
}

void write_coeffs(const std::filesystem::path& path, const HarmonicCoeffs<double>& c) {
  auto out = open_out(path);
  write_coeffs(out, c);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

HarmonicCoeffs<double> read_coeffs(const std::filesystem::path& path) {
  check_size(path, coeff_file_size(peek_band_limit(path, kCoeffMagic, "coefficient")));
  auto in = open_in(path);
  return read_coeffs(in);
}

void write_map(const std::filesystem::path& path, const SphereSignal<double>& f) {
  auto out = open_out(path);
  write_map(out, f);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SphereSignal<double> read_map(const std::filesystem::path& path) {
  check_size(path, map_file_size(peek_band_limit(path, kMapMagic, "map")));
  auto in = open_in(path);
  return read_map(in);
}

void write_coeffs_csv(const std::filesystem::path& path, const HarmonicCoeffs<double>& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "l,m,re,im\n";
  for (int l = 0; l < c.L(); ++l)
    for (int m = -l; m <= l; ++m) out << l << ',' << m << ',' << c(l, m).real() << ',' << c(l, m).imag() << '\n';
}

void write_map_csv(const std::filesystem::path& path, const SphereSignal<double>& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const SamplingGrid<double> grid(f.L());
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "ring,theta,p,phi,re,im\n";
  for (int t = 0; t < f.rings(); ++t)
    for (int p = 0; p < f.longitudes(); ++p)
      out << t << ',' << grid.theta(t) << ',' << p << ',' << grid.phi(p) << ',' << f(t, p).real() << ','
          << f(t, p).imag() << '\n';
}

}  // namespace sridge::io
