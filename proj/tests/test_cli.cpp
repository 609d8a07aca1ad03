#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sawtm/cli.hpp"
#include "sawtm/series_file.hpp"

using namespace sawtm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "sawtm_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("enumerate agrees with the oracle") {
  const auto dir = scratch();
  const std::string a = (dir / "a.series").string();
  const std::string b = (dir / "b.series").string();
  CHECK(run({"enumerate", "--wmax", "4", "-o", a}).code == 0);
  CHECK(run({"oracle", "--nmax", "9", "-o", b}).code == 0);
  const Run v = run({"verify", a, b});
  CHECK(v.code == 0);
}

TEST_CASE("verify reports the first difference") {
  const auto dir = scratch();
  const std::string a = (dir / "c.series").string();
  const std::string b = (dir / "d.series").string();
  std::ofstream(a) << "0\t1\n1\t4\n2\t12\n3\t36\n";
  std::ofstream(b) << "0\t1\n1\t4\n2\t13\n3\t36\n";
  const Run v = run({"verify", a, b});
  CHECK(v.code == 1);
  CHECK((v.out + v.err).find("n = 2") != std::string::npos);
}

TEST_CASE("pruning does not change the output") {
  const auto dir = scratch();
  const std::string a = (dir / "p.series").string();
  const std::string b = (dir / "q.series").string();
  CHECK(run({"enumerate", "--wmax", "2", "-o", a}).code == 0);
  CHECK(run({"enumerate", "--wmax", "2", "--no-prune", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("workers give identical files") {
  const auto dir = scratch();
  const std::string a = (dir / "w1.series").string();
  const std::string b = (dir / "w3.series").string();
  CHECK(run({"enumerate", "--wmax", "5", "--workers", "1", "-o", a}).code == 0);
  CHECK(run({"enumerate", "--wmax", "5", "--workers", "3", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("residue output converts back") {
  const auto dir = scratch();
  const std::string r = (dir / "r.series").string();
  const std::string e = (dir / "e.series").string();
  CHECK(run({"enumerate", "--wmax", "3", "--residues", "-o", r}).code == 0);
  CHECK(read_series(std::filesystem::path(r)).moduli.size() == 2);
  CHECK(run({"crt", "--series", r, "-o", e}).code == 0);
  CHECK(read_series(std::filesystem::path(e)).values.back() == 2172);
  const Run c = run({"crt", "--residues", "2,3", "--moduli", "3,5"});
  CHECK(c.code == 0);
  CHECK(c.out.find('8') != std::string::npos);
}

TEST_CASE("ratios") {
  const Run r = run({"ratios", "--A", "1.17704242", "--C", "0.771182", "--D", "0.1081975", "--E", "0.339043"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F = -") != std::string::npos);
}

TEST_CASE("bad input fails cleanly") {
  CHECK(run({"enumerate", "--bogus"}).code != 0);
  CHECK(run({"verify", "/nonexistent/a", "/nonexistent/b"}).code != 0);
  CHECK(run({"enumerate", "--wmax", "2", "--moduli", "6,9", "-o", "-"}).code != 0);
  const auto dir = scratch();
  const std::string bad = (dir / "bad.series").string();
  std::ofstream(bad) << "0\t1\n1\tx\n";
  CHECK(run({"analyze", "--series", bad, "-o", (dir / "x.csv").string()}).code != 0);
}
