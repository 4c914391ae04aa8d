#include <doctest.h>

#include <stdexcept>

#include <fstream>
#include <sstream>

#include "hhd/cli.hpp"
#include "hhd/spectra_io.hpp"
#include "support.hpp"

using namespace hhd;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decompose of a zero field") {
  testing::TempDir dir("cli_zero");
  write_spectrum(ZSpectrum(6), dir / "th.txt");
  write_spectrum(ZSpectrum(6), dir / "ph.txt");
  const auto r = call({"decompose", "--input-theta", dir / "th.txt", "--input-phi", dir / "ph.txt", "--out-prefix",
                       dir / "o"});
  REQUIRE(r.code == cli::kExitOk);
  const auto s = read_scalar_spectrum(dir / "o_spheroidal.txt");
  const auto t = read_scalar_spectrum(dir / "o_toroidal.txt");
  CHECK(s.degree() == 5);
  for (double v : s.data()) CHECK(v == 0.0);
  for (double v : t.data()) CHECK(v == 0.0);
  const auto res = csv(slurp(dir / "o_residual.csv"));
  CHECK(res[0].size() == 3);
  CHECK(res.size() == 9);  // header + |m| = 0..n+1
}

TEST_CASE("differentiate then decompose recovers the potentials") {
  testing::TempDir dir("cli_pipe");
  REQUIRE(call({"differentiate", "--n", "24", "--seed", "9", "--out-prefix", dir / "f"}).code == 0);
  const auto r = call({"decompose", "--input-theta", dir / "f_theta.txt", "--input-phi", dir / "f_phi.txt",
                       "--out-prefix", dir / "g", "--reference-prefix", dir / "f"});
  REQUIRE(r.code == cli::kExitOk);
  const auto pos = r.out.find("recovery_error=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 15)) <= 1e-12);
  CHECK(read_z_spectrum(dir / "f_theta.txt").degree() == 24);
}

TEST_CASE("decompose validation failures") {
  testing::TempDir dir("cli_bad");
  write_spectrum(ZSpectrum(6), dir / "a.txt");
  write_spectrum(ZSpectrum(7), dir / "b.txt");
  auto r = call({"decompose", "--input-theta", dir / "a.txt", "--input-phi", dir / "b.txt", "--out-prefix", dir / "o"});
  CHECK(r.code == cli::kExitValidation);
  CHECK(r.err.find("error") != std::string::npos);

  std::ofstream(dir / "junk.txt") << "l,m,value\n1,1,abc\n";
  r = call({"decompose", "--input-theta", dir / "junk.txt", "--input-phi", dir / "a.txt", "--out-prefix", dir / "o"});
  CHECK(r.code == cli::kExitValidation);

  r = call({"decompose", "--input-theta", dir / "missing.txt", "--input-phi", dir / "a.txt", "--out-prefix", dir / "o"});
  CHECK(r.code == cli::kExitValidation);
}

TEST_CASE("roundtrip output") {
  const auto a = call({"roundtrip", "--n", "32", "--seed", "5", "--iters", "3"});
  REQUIRE(a.code == 0);
  const auto rows = csv(a.out);
  REQUIRE(rows.size() == 5);
  CHECK(a.out.rfind(cli::kRoundtripHeader, 0) == 0);
  CHECK(rows[4][1] == "mean");
  for (int i = 1; i <= 3; ++i) {
    CHECK(rows[i][1] == std::to_string(i));
    CHECK(std::stod(rows[i][2]) <= 1e-13);
  }
  // Errors are deterministic in the seed; timings are not.
  const auto b = call({"roundtrip", "--n", "32", "--seed", "5", "--iters", "3"});
  const auto rows_b = csv(b.out);
  for (int i = 1; i <= 3; ++i) CHECK(rows_b[i][2] == rows[i][2]);
  const auto c = call({"roundtrip", "--n", "32", "--seed", "6", "--iters", "3"});
  CHECK(csv(c.out)[1][2] != rows[1][2]);

  CHECK(call({"roundtrip", "--n", "32", "--iters", "0"}).code == cli::kExitValidation);
  CHECK(call({"roundtrip", "--n", "1"}).code == cli::kExitValidation);
  CHECK(call({"roundtrip", "--n", "16", "--iters", "1", "--tol", "1e-30"}).code == cli::kExitNumerical);
}

TEST_CASE("cond rows") {
  const auto r = call({"cond", "--n-list", "10", "--m-list", "1,2,5"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(r.out.rfind(cli::kCondHeader, 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 8);
    const int m = std::stoi(rows[i][1]);
    CHECK(std::stod(rows[i][2]) <= std::stod(rows[i][4]));
    if (m == 1) {
      CHECK(rows[i][6].empty());
      CHECK_FALSE(rows[i][7].empty());
    } else {
      CHECK(std::stod(rows[i][6]) >= m - 1.5);
      CHECK(rows[i][7].empty());
    }
  }
  CHECK(std::stod(rows[2][4]) == doctest::Approx(27.0));

  CHECK(call({"cond", "--n-list", "600"}).code == cli::kExitValidation);
  CHECK(call({"cond", "--n-list", "8", "--m-list", "0"}).code == cli::kExitValidation);
}

TEST_CASE("verify and argument errors") {
  const auto v = call({"verify"});
  CHECK(v.code == 0);
  CHECK(v.out.find("all suites passed") != std::string::npos);
  CHECK(call({"verify", "--level", "deep"}).code == cli::kExitValidation);
  CHECK(call({}).code == cli::kExitValidation);
  CHECK(call({"frobnicate"}).code == cli::kExitValidation);
  CHECK(call({"differentiate", "--n", "x", "--out-prefix", "p"}).code == cli::kExitValidation);
  CHECK(call({"bench", "--n-list", "1,4"}).code == cli::kExitValidation);
}
