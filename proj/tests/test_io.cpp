#include <doctest.h>

#include "summa/io.hpp"
#include "support.hpp"

using namespace summa;
using summa::testing::Gen;

TEST_CASE("coefficient encoding") {
  CHECK(io::to_json(Coefficient(GaussianRational(Rational(-1), Rational(3, 4)))).dump() == "[-1,1,3,4]");
  CHECK(io::to_json(Coefficient(Complex(0.5, -2))).dump() == "[0.5,-2.0]");
  mpz_class big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000;
  auto j = io::to_json(Coefficient(Rational(big)));
  CHECK(j[0].is_string());
  CHECK(io::coefficient_from_json(j).exact().re() == Rational(big));
  CHECK(io::coefficient_from_json(io::json("-3/6")).exact() == GaussianRational(Rational(-1, 2)));
  CHECK(io::coefficient_from_json(io::json(7)).exact() == GaussianRational(7));
  CHECK_THROWS_CODE(io::coefficient_from_json(io::json::array({1, 0, 0, 1})), ErrorCode::ParseError);
  CHECK_THROWS_CODE(io::coefficient_from_json(io::json("x")), ErrorCode::ParseError);
}

TEST_CASE("property: series round trip") {
  Gen gen(0x10e001);
  for (int trial = 0; trial < 20; ++trial) {
    int start = static_cast<int>(gen.integer(0, 2));
    auto f = gen.series(start, start + static_cast<int>(gen.integer(0, 15)), 1000000);
    auto back = io::series_from_json(io::parse(io::to_json(f).dump(), "test"));
    CHECK(back.start_index() == f.start_index());
    CHECK(back.available_order() == f.available_order());
    for (int p = f.start_index(); p <= f.available_order(); ++p) CHECK(coeff(back, p) == coeff(f, p));
  }
  auto fl = FormalPowerSeries::from_list(1, {Coefficient(Complex(0.1, 0.2)), Coefficient(3.0)});
  auto j = io::to_json(fl);
  CHECK(j["mode"] == "float");
  CHECK(io::series_from_json(j).stored()[0] == fl.stored()[0]);
}

TEST_CASE("recursion, rational function and ode round trips") {
  Recursion rec{2, {Coefficient(Rational(1, 2)), Coefficient(GaussianRational(0, 3))}, MomentWeight::qpower(Rational(3, 2))};
  auto back = io::recursion_from_json(io::to_json(rec), MomentWeight::factorial(1));
  CHECK(back.r == 2);
  CHECK(back.a[1] == rec.a[1]);
  CHECK(back.weight.label() == "qpower:3/2");
  CHECK_THROWS_CODE(io::recursion_from_json(io::json{{"r", 3}, {"a", io::json::array({1})}}, MomentWeight::unit()),
                    ErrorCode::ParseError);

  RationalFunction G(Polynomial({Coefficient(0), Coefficient(-1)}), Polynomial({Coefficient(1), Coefficient(1)}));
  auto G2 = io::rational_from_json(io::to_json(G));
  CHECK(G2.num() == G.num());
  CHECK(G2.den() == G.den());

  for (OperatorKind kind : {OperatorKind{Diff1{}}, OperatorKind{DiffS{3}}, OperatorKind{QDilation{Rational(5, 2)}},
                            OperatorKind{Moment{MomentWeight::factorial(2)}}}) {
    auto spec = make_ode_spec(kind, Polynomial({Coefficient(1), Coefficient(2)}),
                              FormalPowerSeries::from_list(1, {Coefficient(-1)}));
    auto j = io::to_json(spec);
    auto s2 = io::ode_from_json(j);
    CHECK(kind_name(s2.kind) == kind_name(kind));
    CHECK(io::to_json(s2) == j);
  }
}

TEST_CASE("weights and parse errors") {
  CHECK(io::parse_weight("factorial:2").s() == 2);
  CHECK(io::parse_weight("qpower:2").q() == 2);
  CHECK(io::parse_weight("unit").is_unit());
  CHECK_THROWS_CODE(io::parse_weight("factorial:1.5"), ErrorCode::ParseError);
  CHECK_THROWS_CODE(io::parse_weight("gamma:2"), ErrorCode::ParseError);
  CHECK_THROWS_CODE(io::parse_weight("custom:/nonexistent/file.json"), ErrorCode::ParseError);
  try {
    io::parse("{\"start\": 1, \"coeffs\": [1, }", "inline");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("byte 28") != std::string::npos);
  }
}
