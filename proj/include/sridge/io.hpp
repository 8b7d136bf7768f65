#pragma once

#include <filesystem>
#include <iosfwd>

#include "sridge/harmonic.hpp"

namespace sridge::io {

// Binary layouts, all little-endian:
//   coefficients: "SSHC1", u32 L, i32 spin, L^2 (re, im) float64 pairs in lm_index order
//   maps:         "SMAP1", u32 L, i32 spin, L*(2L-1) (re, im) float64 pairs, ring-major
inline constexpr std::size_t kHeaderBytes = 13;

std::uint64_t coeff_file_size(int L);
std::uint64_t map_file_size(int L);

void write_coeffs(std::ostream& out, const HarmonicCoeffs<double>& c);
HarmonicCoeffs<double> read_coeffs(std::istream& in);
void write_map(std::ostream& out, const SphereSignal<double>& f);
SphereSignal<double> read_map(std::istream& in);

void write_coeffs(const std::filesystem::path& path, const HarmonicCoeffs<double>& c);
HarmonicCoeffs<double> read_coeffs(const std::filesystem::path& path);
void write_map(const std::filesystem::path& path, const SphereSignal<double>& f);
SphereSignal<double> read_map(const std::filesystem::path& path);

/// Human-readable dumps: "l,m,re,im" and "ring,theta,p,phi,re,im".
void write_coeffs_csv(const std::filesystem::path& path, const HarmonicCoeffs<double>& c);
void write_map_csv(const std::filesystem::path& path, const SphereSignal<double>& f);

}  // namespace sridge::io
