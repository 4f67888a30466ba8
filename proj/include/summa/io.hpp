#pragma once

#include <string>

#include "json.hpp"

#include "summa/hankel.hpp"
#include "summa/kernels.hpp"
#include "summa/operators.hpp"
#include "summa/rational.hpp"
#include "summa/regular_seq.hpp"
#include "summa/series.hpp"
#include "summa/summation.hpp"

namespace summa::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "summa/1";

// Exact: [re_num, re_den, im_num, im_den], integers beyond int64 as decimal
// strings. Float: [re, im].
json to_json(const Coefficient& c);
// Also accepts a bare number or a rational string such as "-3/4".
Coefficient coefficient_from_json(const json& j);

json to_json(const FormalPowerSeries& s);
FormalPowerSeries series_from_json(const json& j);

json to_json(const Polynomial& p);  // ascending coefficients
Polynomial polynomial_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const json& j);

// "factorial:s", "qpower:q", "custom:<path to a JSON array>" or "unit".
MomentWeight parse_weight(const std::string& text);
std::string weight_label(const MomentWeight& w);

json to_json(const Recursion& rec);
// {"r", "a", optional "weight"}; `fallback` applies when "weight" is absent.
Recursion recursion_from_json(const json& j, const MomentWeight& fallback);

json to_json(const DirectionSet& d);
json to_json(const HankelReport& h);
json to_json(const ApproxRecursionCertificate& c);
json to_json(const OdeSpec& spec);
OdeSpec ode_from_json(const json& j);
json to_json(const SumResult& r, Complex z);
json to_json(const Diagnostics& d);

// Parses text as JSON; ParseError carries the byte position.
json parse(const std::string& text, const std::string& origin);

}  // namespace summa::io
