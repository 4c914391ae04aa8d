#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "hhd/spectra.hpp"

namespace hhd {

/// Raised for malformed coefficient files; the message carries the line number.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnySpectrum = std::variant<ScalarSpectrum, ZSpectrum>;

// Text format:
//   # basis=<Y|Z> n=<int>
//   l,m,value        (one row per coefficient, order-major, value as %.16e)
// Rows that are absent read back as zero.

void write_spectrum(std::ostream& out, const CoefficientTable& spectrum);
void write_spectrum(const CoefficientTable& spectrum, const std::filesystem::path& path);

AnySpectrum read_spectrum(std::istream& in);
AnySpectrum read_spectrum(const std::filesystem::path& path);

ScalarSpectrum read_scalar_spectrum(const std::filesystem::path& path);
ZSpectrum read_z_spectrum(const std::filesystem::path& path);

}  // namespace hhd
