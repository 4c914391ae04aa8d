#include "hhd/spectra_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace hhd {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail(line, "bad integer '" + std::string(s) + "'");
  return value;
}

double parse_double(std::string_view s, std::size_t line) {
  const std::string text(trim(s));
  if (text.empty()) fail(line, "missing value");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) fail(line, "bad value '" + text + "'");
  if (!std::isfinite(value)) fail(line, "non-finite value '" + text + "'");
  return value;
}

template <class Table>
AnySpectrum read_rows(std::istream& in, int n, std::size_t& line) {
  Table table(n);
  std::string row;
  while (std::getline(in, row)) {
    ++line;
    const std::string_view view = trim(row);
    if (view.empty()) continue;
    const auto c1 = view.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos) fail(line, "expected 'l,m,value'");
    const int l = parse_int(view.substr(0, c1), line);
    const int m = parse_int(view.substr(c1 + 1, c2 - c1 - 1), line);
    const double value = parse_double(view.substr(c2 + 1), line);
    if (!table.contains(l, m))
      fail(line, "index (" + std::to_string(l) + "," + std::to_string(m) + ") outside the basis index set");
    table(l, m) = value;
  }
  return table;
}

}  // namespace

void write_spectrum(std::ostream& out, const CoefficientTable& spectrum) {
  out << "# basis=" << (spectrum.basis() == Basis::Y ? "Y" : "Z") << " n=" << spectrum.degree() << '\n';
  char buffer[64];
  for (int m = -spectrum.max_order(); m <= spectrum.max_order(); ++m) {
    const auto run = spectrum.order(m);
    const int first = spectrum.first_degree(m);
    for (std::size_t k = 0; k < run.size(); ++k) {
      std::snprintf(buffer, sizeof buffer, "%d,%d,%.16e\n", first + static_cast<int>(k), m, run[k]);
      out << buffer;
    }
  }
}

void write_spectrum(const CoefficientTable& spectrum, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_spectrum(out, spectrum);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

AnySpectrum read_spectrum(std::istream& in) {
  std::string header;
  std::size_t line = 1;
  if (!std::getline(in, header)) fail(line, "empty file");
  std::string_view h = trim(header);
  if (!h.starts_with('#')) fail(line, "header must start with '#'");
  h = trim(h.substr(1));
  if (!h.starts_with("basis=")) fail(line, "header missing 'basis='");
  h.remove_prefix(6);
  const auto space = h.find(' ');
  if (space == std::string_view::npos) fail(line, "header missing 'n='");
  const std::string_view basis = h.substr(0, space);
  h = trim(h.substr(space));
  if (!h.starts_with("n=")) fail(line, "header missing 'n='");
  const int n = parse_int(h.substr(2), line);
  if (n < 0) fail(line, "negative degree");
  if (basis == "Y") return read_rows<ScalarSpectrum>(in, n, line);
  if (basis == "Z") return read_rows<ZSpectrum>(in, n, line);
  fail(line, "unknown basis '" + std::string(basis) + "'");
}

AnySpectrum read_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_spectrum(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

ScalarSpectrum read_scalar_spectrum(const std::filesystem::path& path) {
  auto any = read_spectrum(path);
  if (auto* s = std::get_if<ScalarSpectrum>(&any)) return std::move(*s);
  throw FormatError(path.string() + ": expected basis=Y");
}

ZSpectrum read_z_spectrum(const std::filesystem::path& path) {
  auto any = read_spectrum(path);
  if (auto* z = std::get_if<ZSpectrum>(&any)) return std::move(*z);
  throw FormatError(path.string() + ": expected basis=Z");
}

}  // namespace hhd
