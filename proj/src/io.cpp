#include "summa/io.hpp"

#include <fstream>
#include <sstream>

#include "summa/error.hpp"

namespace summa::io {

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational fraction(const json& num, const json& den) {
  Rational r(integer_from_json(num), integer_from_json(den));
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + num.dump() + "/" + den.dump());
  r.canonicalize();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json coeff_array(const std::vector<Coefficient>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

std::vector<Coefficient> coeffs_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a coefficient array");
  std::vector<Coefficient> out;
  for (const auto& c : j) out.push_back(coefficient_from_json(c));
  return out;
}

}  // namespace

json to_json(const Coefficient& c) {
  if (c.is_exact()) {
    const auto& g = c.exact();
    return json::array({integer_json(g.re().get_num()), integer_json(g.re().get_den()),
                        integer_json(g.im().get_num()), integer_json(g.im().get_den())});
  }
  Complex z = c.to_complex();
  return json::array({z.real(), z.imag()});
}

Coefficient coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return Coefficient(j.get<long>());
  if (j.is_number_float()) return Coefficient(j.get<double>());
  if (j.is_string()) return Coefficient(parse_rational(j.get<std::string>()));
  if (j.is_array() && j.size() == 4) return Coefficient(GaussianRational(fraction(j[0], j[1]), fraction(j[2], j[3])));
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Coefficient(Complex(j[0].get<double>(), j[1].get<double>()));
  throw Error(ErrorCode::ParseError, "bad coefficient " + j.dump());
}

json to_json(const FormalPowerSeries& s) {
  json c = json::array();
  for (const auto& v : s.stored()) c.push_back(to_json(v));
  return {{"start", s.start_index()}, {"mode", s.is_exact() ? "exact" : "float"}, {"coeffs", c}};
}

FormalPowerSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorCode::ParseError, "series object needs \"coeffs\"");
  int start = j.value("start", 1);
  std::vector<Coefficient> cs = coeffs_from_json(j.at("coeffs"));
  std::string mode = j.value("mode", "");
  if (mode == "float") {
    for (auto& c : cs) c = c.to_float();
  } else if (mode == "exact") {
    for (const auto& c : cs)
      if (!c.is_exact()) throw Error(ErrorCode::ParseError, "float coefficient in an exact series");
  } else if (!mode.empty()) {
    throw Error(ErrorCode::ParseError, "unknown series mode '" + mode + "'");
  }
  return FormalPowerSeries::from_list(start, std::move(cs));
}

json to_json(const Polynomial& p) { return coeff_array(p.coeffs()); }

Polynomial polynomial_from_json(const json& j) { return Polynomial(coeffs_from_json(j)); }

json to_json(const RationalFunction& f) {
  json poles = json::array();
  for (const auto& r : f.poles())
    poles.push_back({{"root", {r.value.real(), r.value.imag()}}, {"multiplicity", r.multiplicity}});
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"poles", poles}};
}

RationalFunction rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num")) throw Error(ErrorCode::ParseError, "rational function needs \"num\"");
  Polynomial den = j.contains("den") ? polynomial_from_json(j.at("den")) : Polynomial::constant(Coefficient(1));
  return RationalFunction(polynomial_from_json(j.at("num")), den);
}

MomentWeight parse_weight(const std::string& text) {
  if (text == "unit") return MomentWeight::unit();
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "weight '" + text + "' lacks a kind prefix");
  std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
  if (kind == "factorial") {
    Rational s = parse_rational(arg);
    if (s.get_den() != 1 || !s.get_num().fits_sint_p())
      throw Error(ErrorCode::ParseError, "factorial weight needs an integer s, got '" + arg + "'");
    return MomentWeight::factorial(static_cast<int>(s.get_num().get_si()));
  }
  if (kind == "qpower") return MomentWeight::qpower(parse_rational(arg));
  if (kind == "custom") return MomentWeight::custom(coeffs_from_json(parse(read_file(arg), arg)), text);
  throw Error(ErrorCode::ParseError, "unknown weight kind '" + kind + "'");
}

std::string weight_label(const MomentWeight& w) { return w.label(); }

json to_json(const Recursion& rec) {
  return {{"r", rec.r}, {"a", coeff_array(rec.a)}, {"weight", rec.weight.label()}};
}

Recursion recursion_from_json(const json& j, const MomentWeight& fallback) {
  if (!j.is_object() || !j.contains("a")) throw Error(ErrorCode::ParseError, "recursion object needs \"a\"");
  Recursion rec;
  rec.a = coeffs_from_json(j.at("a"));
  rec.r = j.value("r", static_cast<int>(rec.a.size()));
  if (rec.r != static_cast<int>(rec.a.size()))
    throw Error(ErrorCode::ParseError, "recursion r = " + std::to_string(rec.r) + " but " +
                                           std::to_string(rec.a.size()) + " coefficients");
  rec.weight = j.contains("weight") ? parse_weight(j.at("weight").get<std::string>()) : fallback;
  return rec;
}

json to_json(const DirectionSet& d) {
  json args = json::array(), roots = json::array(), mult = json::array();
  for (const auto& e : d.entries) {
    args.push_back(e.arg);
    mult.push_back(e.multiplicity);
    for (const auto& r : e.roots) roots.push_back({r.real(), r.imag()});
  }
  return {{"args_radians", args}, {"multiplicities", mult}, {"roots", roots}};
}

json to_json(const HankelReport& h) {
  json dets = json::array();
  for (const auto& [n, det] : h.determinants) {
    json v = det.is_exact() ? json(det.exact().to_string()) : json({det.to_complex().real(), det.to_complex().imag()});
    dets.push_back({{"n", n}, {"det", v}});
  }
  return {{"rank", h.rank}, {"determinants", dets}, {"extra_zero_checks", h.extra_zero_checks}};
}

json to_json(const ApproxRecursionCertificate& c) {
  return {{"recursion", to_json(c.rec)},
          {"C", c.C},
          {"M", c.M},
          {"max_normalized_residual", c.max_normalized_residual},
          {"growth_consistent", c.growth_consistent}};
}

json to_json(const OdeSpec& spec) {
  json j = {{"kind", kind_name(spec.kind)}};
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DiffS>) j["s"] = k.s;
        if constexpr (std::is_same_v<K, QDilation>) j["q"] = k.q.get_str();
        if constexpr (std::is_same_v<K, Moment>) j["moments"] = k.m.label();
      },
      spec.kind);
  j["P"] = to_json(spec.P);
  j["rhs"] = to_json(spec.rhs);
  return j;
}

OdeSpec ode_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("P"))
    throw Error(ErrorCode::ParseError, "OdeSpec needs \"kind\" and \"P\"");
  std::string kind = j.at("kind").get<std::string>();
  OperatorKind op;
  if (kind == "diff1") {
    op = Diff1{};
  } else if (kind == "diffs") {
    op = diff_operator(j.at("s").get<int>());
  } else if (kind == "qdilation") {
    const json& q = j.at("q");
    op = QDilation{q.is_string() ? parse_rational(q.get<std::string>()) : rational_from_double(q.get<double>())};
  } else if (kind == "moment") {
    const json& m = j.at("moments");
    op = Moment{m.is_string() ? parse_weight(m.get<std::string>()) : MomentWeight::custom(coeffs_from_json(m))};
  } else {
    throw Error(ErrorCode::ParseError, "unknown operator kind '" + kind + "'");
  }
  FormalPowerSeries rhs = j.contains("rhs") ? series_from_json(j.at("rhs")) : FormalPowerSeries::zero(1, 0);
  return make_ode_spec(op, polynomial_from_json(j.at("P")), rhs);
}

json to_json(const SumResult& r, Complex z) {
  return {{"z", {z.real(), z.imag()}},
          {"sum", {r.value.real(), r.value.imag()}},
          {"err_est", r.error_estimate},
          {"nodes", r.nodes_used},
          {"truncation_radius", r.truncation_radius}};
}

json to_json(const Diagnostics& d) {
  json mg = {{"ok", d.mg_detail.ok}, {"A", d.mg_detail.A}, {"A_half", d.mg_detail.A_half}};
  json snq = {{"status", d.snq.status == SnqStatus::Finite ? "finite" : "inconclusive"}};
  if (d.snq.status == SnqStatus::Finite) snq["B"] = d.snq.B;
  else snq["reason"] = d.snq.reason;
  json om = {{"value", d.omega.value},
             {"infinite", d.omega.infinite},
             {"stable", d.omega.stable},
             {"spread", d.omega.spread}};
  json prox = {{"ok", d.proximate.ok},
               {"spread", d.proximate.spread},
               {"liminf", d.proximate.liminf},
               {"limsup", d.proximate.limsup}};
  return {{"lc", d.lc_ok}, {"mg", mg}, {"snq", snq}, {"omega", om}, {"proximate_order", prox}};
}

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace summa::io
