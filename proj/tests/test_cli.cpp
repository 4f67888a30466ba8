#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "summa/io.hpp"
#include "support.hpp"

using namespace summa;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string euler_inline(int N) { return io::to_json(testing::euler_series(N)).dump(); }

}  // namespace

TEST_CASE("detect on the Euler coefficients") {
  auto r = run({"detect", "--input", euler_inline(30), "--weight", "factorial:1"});
  REQUIRE(r.code == 0);
  auto j = r.j();
  CHECK(j["schema"] == "summa/1");
  CHECK(j["result"]["r"] == 1);
  CHECK(j["result"]["a"].dump() == "[[-1,1,0,1]]");
  CHECK(j["params"]["weight"] == "factorial:1");
  CHECK(j["result"]["hankel"]["extra_zero_checks"] == 3);
}

TEST_CASE("directions on the detected recursion") {
  auto d = run({"detect", "--input", euler_inline(30)});
  auto r = run({"directions", "--input", d.j()["result"].dump()});
  REQUIRE(r.code == 0);
  CHECK(r.j()["result"]["args_radians"][0].get<double>() == doctest::Approx(3.14159265));
  CHECK(r.j()["result"]["args_radians"].size() == 1);
}

TEST_CASE("sum emits the CSV grid") {
  json G = {{"G", {{"num", {0, -1}}, {"den", {1, 1}}}}, {"offset", 1}};
  auto r = run({"sum", "--input", G.dump(), "--direction", "0", "--zgrid", "0.05,0.2,4", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# summa/1 ", 0) == 0);
  std::getline(in, line);
  CHECK(line == "z_re,z_im,sum_re,sum_im,err_est,nodes");
  bool seen = false;
  while (std::getline(in, line)) {
    double zr, zi, sr, si;
    char c;
    std::istringstream row(line);
    row >> zr >> c >> zi >> c >> sr >> c >> si;
    if (std::abs(zr - 0.1) < 1e-12) {
      seen = true;
      CHECK(std::abs(sr - testing::euler_sum_oracle(0.1)) <= 1e-6);
    }
  }
  CHECK(seen);

  // The series path lands on the same numbers.
  auto s = run({"sum", "--input", euler_inline(30), "--zgrid", "0.05,0.2,4"});
  REQUIRE(s.code == 0);
  CHECK(s.j()["result"]["rows"][1]["sum"][0].get<double>() == doctest::Approx(0.915633339397881).epsilon(1e-12));
  auto par = run({"sum", "--input", euler_inline(30), "--zgrid", "0.05,0.2,4", "--jobs", "4"});
  CHECK(par.j()["result"] == s.j()["result"]);
}

TEST_CASE("gen then detect reproduces the recursion") {
  json rec = {{"r", 2}, {"a", {{1, 2, 0, 1}, {-3, 1, 2, 5}}}, {"weight", "factorial:1"}, {"seeds", {{1, 1, 0, 1}, {0, 1, 1, 1}}}};
  auto g = run({"gen", "--input", rec.dump(), "--order", "24"});
  REQUIRE(g.code == 0);
  auto d = run({"detect", "--input", g.out, "--weight", "factorial:1"});
  REQUIRE(d.code == 0);
  CHECK(d.j()["result"]["a"] == rec["a"]);
}

TEST_CASE("ode reports canonical and user-convention right-hand sides") {
  auto r = run({"ode", "--input", euler_inline(20), "--order", "10"});
  REQUIRE(r.code == 0);
  auto ode = r.j()["result"]["ode"];
  CHECK(ode["kind"] == "diff1");
  CHECK(ode["P"].dump() == "[[1,1,0,1],[1,1,0,1]]");
  CHECK(ode["rhs"]["coeffs"][0].dump() == "[-1,1,0,1]");
  // (1 + z^2 d/dz + z) f = 1 for the p >= 0 series.
  auto user = io::series_from_json(ode["rhs_user"]);
  CHECK(user.at(0).exact() == GaussianRational(1));
  for (int p = 1; p <= 10; ++p) CHECK(user.at(p).is_zero());
}

TEST_CASE("qsum and verify") {
  std::vector<Coefficient> c;
  auto w = MomentWeight::qpower(Rational(2));
  for (int p = 1; p <= 12; ++p) c.push_back(Coefficient(p % 2 ? -1 : 1) * w.value(p));
  auto series = io::to_json(FormalPowerSeries::from_list(1, c)).dump();
  auto q = run({"qsum", "--input", series, "--weight", "qpower:2", "--zgrid", "0.01,0.02,2"});
  REQUIRE(q.code == 0);
  CHECK(q.j()["result"]["variation_residual"].get<double>() <= 1e-12);

  auto v = run({"verify", "--input", euler_inline(30), "--zgrid", "0.05,0.2,4", "--order", "12"});
  REQUIRE(v.code == 0);
  auto res = v.j()["result"];
  CHECK(res["formal"]["solution"] == true);
  CHECK(res["analytic"]["max_residual"].get<double>() <= 1e-8);
  CHECK(res["asymptotic"]["ok"] == true);
}

TEST_CASE("seqdiag verdicts") {
  auto ok = run({"seqdiag", "--sequence", "gevrey:2", "--window", "500"});
  REQUIRE(ok.code == 0);
  CHECK(ok.j()["result"]["mg"]["ok"] == true);
  auto bad = run({"seqdiag", "--sequence", "qpower:2", "--window", "500"});
  CHECK(bad.code == 2);
  CHECK(bad.j()["result"]["omega"]["infinite"] == true);
}

TEST_CASE("exit codes and rejected input") {
  auto nf = run({"detect", "--input", io::to_json(FormalPowerSeries::zero(1, 10)).dump()});
  CHECK(nf.code == 2);
  CHECK(nf.j()["result"]["reason"] == "ZeroSequence");

  CHECK(run({"detect", "--input", euler_inline(10), "--bogus", "1"}).code == 1);
  CHECK(run({"detect", "--input", euler_inline(10), "--zgrid", "0,1,2"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"detect", "--input", euler_inline(10), "--format", "csv"}).code == 1);

  auto pe = run({"detect", "--input", "{\"coeffs\": [1,"});
  CHECK(pe.code == 1);
  CHECK(pe.err.find("ParseError") != std::string::npos);
  CHECK(pe.err.find("byte") != std::string::npos);

  auto missing = run({"detect", "--input", "/nonexistent/series.json"});
  CHECK(missing.code == 1);
  auto wrong = run({"sum", "--input", euler_inline(10), "--direction", "deg:180"});
  CHECK(wrong.code == 1);
  CHECK(wrong.err.find("DirectionNotSummable") != std::string::npos);
}

TEST_CASE("identical jobs give byte-identical output, files included") {
  std::vector<std::string> args{"reconstruct", "--input", euler_inline(20)};
  CHECK(run(args).out == run(args).out);
  std::string path = "cli_test_output.json";
  auto r = run({"reconstruct", "--input", euler_inline(20), "--output", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run(args).out);
  CHECK(json::parse(ss.str())["result"]["G"]["den"].dump() == "[[1,1,0,1],[1,1,0,1]]");
  std::remove(path.c_str());
}
