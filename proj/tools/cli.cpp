#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "summa/error.hpp"
#include "summa/io.hpp"
#include "summa/kernels.hpp"

namespace summa::cli {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kVerdict = 2;
constexpr int kError = 1;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string weight;
  std::string direction = "0";
  std::string zgrid;
  std::string sequence;
  double tol = -1.0;
  int jobs = 1;
  int order = -1;
  int window = -1;
  int horizon = 200;
  int approx_rmax = 0;
};

struct Job {
  std::string command;
  Options opt;
  json params;
  std::shared_ptr<spdlog::logger> log;
};

struct Artifact {
  json result;
  int code = kOk;
  std::string csv;  // non-empty for csv output
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_inline(const std::string& input) {
  auto first = input.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (input[first] == '{' || input[first] == '[');
}

json load_input(const std::string& input) {
  json j = is_inline(input) ? io::parse(input, "inline input") : io::parse(read_text(input), input);
  // Envelopes written by this tool can be fed back in.
  if (j.is_object() && j.contains("schema") && j.contains("result")) j = j.at("result");
  return j;
}

double parse_angle(const std::string& text) {
  try {
    if (text.rfind("deg:", 0) == 0) return std::stod(text.substr(4)) * std::numbers::pi / 180.0;
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad angle '" + text + "' (radians, or deg:<degrees>)");
  }
}

struct ZGrid {
  double start, stop;
  int count;
  double arg;
  std::vector<Complex> points() const {
    return segment_grid(std::polar(start, arg), std::polar(stop, arg), count);
  }
};

ZGrid parse_zgrid(const std::string& text, double default_arg) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4)
    throw Error(ErrorCode::ParseError, "zgrid '" + text + "' must be start,stop,count[,arg]");
  ZGrid g{};
  try {
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.count = std::stoi(parts[2]);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad number in zgrid '" + text + "'");
  }
  g.arg = parts.size() == 4 ? parse_angle(parts[3]) : default_arg;
  if (g.count < 1) throw Error(ErrorCode::ParseError, "zgrid count must be positive");
  return g;
}

Exec exec_for(int jobs) { return jobs == 1 ? Exec::Serial : Exec::Parallel; }

FormalPowerSeries input_series(const json& j) {
  if (j.is_object() && j.contains("series")) return io::series_from_json(j.at("series"));
  return io::series_from_json(j);
}

MomentWeight resolve_weight(Job& job, const json* j = nullptr) {
  std::string text = job.opt.weight;
  if (text.empty() && j && j->is_object() && j->contains("weight")) text = j->at("weight").get<std::string>();
  if (text.empty()) text = "factorial:1";
  job.params["weight"] = text;
  return io::parse_weight(text);
}

double resolve_tol(Job& job, double fallback) {
  double t = job.opt.tol > 0 ? job.opt.tol : fallback;
  job.params["tol"] = t;
  return t;
}

json not_found_json(const NotFound& nf) {
  return {{"status", "not_found"}, {"reason", std::string(to_string(nf.reason))}, {"detail", nf.detail}};
}

struct Detection {
  FormalPowerSeries f;
  MomentWeight weight = MomentWeight::unit();
  std::vector<Coefficient> d;  // d_1 .. d_N
  Outcome<Recursion> rec = NotFound{NotFoundReason::ZeroSequence, ""};
};

Detection detect_series(Job& job, const json& in) {
  Detection det;
  det.f = input_series(in);
  det.weight = resolve_weight(job, &in);
  double tol = resolve_tol(job, kDefaultTolerance);
  det.d = borel_transform(det.f, det.weight).canonical();
  det.rec = min_recursion(det.d, det.weight, tol);
  if (found(det.rec)) {
    const auto& rec = std::get<Recursion>(det.rec);
    job.log->info("detected recursion of order {} under weight {}", rec.r, det.weight.label());
  } else {
    job.log->info("no recursion: {}", std::get<NotFound>(det.rec).detail);
  }
  return det;
}

json recursion_result(const Recursion& rec) {
  json j = io::to_json(rec);
  j["status"] = "found";
  return j;
}

// Laplace order matching the weight: k = 1/s for p!^s.
double laplace_order(const MomentWeight& w) {
  if (w.kind() != MomentWeight::Kind::Factorial)
    throw Error(ErrorCode::WeightKindMismatch, "sum needs a factorial weight, got " + w.label());
  return 1.0 / w.s();
}

std::string csv_rows(const std::vector<Complex>& zs, const std::vector<SumResult>& rs, Complex offset) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "z_re,z_im,sum_re,sum_im,err_est,nodes\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Complex v = rs[i].value + offset;
    os << zs[i].real() << ',' << zs[i].imag() << ',' << v.real() << ',' << v.imag() << ','
       << rs[i].error_estimate << ',' << rs[i].nodes_used << '\n';
  }
  return os.str();
}

json rows_json(const std::vector<Complex>& zs, const std::vector<SumResult>& rs, Complex offset) {
  json rows = json::array();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    SumResult r = rs[i];
    r.value += offset;
    rows.push_back(io::to_json(r, zs[i]));
  }
  return rows;
}

QuadratureConfig quad_config(Job& job) {
  QuadratureConfig cfg;
  cfg.rel_tol = resolve_tol(job, cfg.rel_tol);
  return cfg;
}

ZGrid resolve_grid(Job& job, double d, const std::string& fallback) {
  std::string text = job.opt.zgrid.empty() ? fallback : job.opt.zgrid;
  ZGrid g = parse_zgrid(text, d);
  job.params["zgrid"] = {{"start", g.start}, {"stop", g.stop}, {"count", g.count}, {"arg", g.arg}};
  return g;
}

double resolve_direction(Job& job) {
  double d = parse_angle(job.opt.direction);
  job.params["direction"] = d;
  return d;
}

void resolve_jobs(Job& job) { job.params["jobs"] = job.opt.jobs; }

// P(op) applied to the user-convention series (constant term included).
FormalPowerSeries user_rhs(const OdeSpec& spec, const FormalPowerSeries& f, int N) {
  OdeSpec bare = make_ode_spec(spec.kind, spec.P, FormalPowerSeries::zero(1, N));
  return formal_residual(bare, f, N);
}

Artifact cmd_detect(Job& job, const json& in) {
  if (job.opt.approx_rmax > 0) {
    FormalPowerSeries f = input_series(in);
    MomentWeight w = resolve_weight(job, &in);
    job.params["approx_rmax"] = job.opt.approx_rmax;
    auto cert = approx_recursion(f.canonical(), w, job.opt.approx_rmax);
    if (!found(cert)) return {not_found_json(std::get<NotFound>(cert)), kVerdict};
    json j = io::to_json(std::get<ApproxRecursionCertificate>(cert));
    j["status"] = "found";
    return {j};
  }
  Detection det = detect_series(job, in);
  if (!found(det.rec)) return {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
  const auto& rec = std::get<Recursion>(det.rec);
  json j = recursion_result(rec);
  j["hankel"] = io::to_json(hankel_report(det.d, rec.r, 3, std::max(job.params["tol"].get<double>(), 1e-8)));
  return {j};
}

Artifact cmd_reconstruct(Job& job, const json& in) {
  Detection det = detect_series(job, in);
  if (!found(det.rec)) return {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
  const auto& rec = std::get<Recursion>(det.rec);
  RationalFunction G = rational_reconstruct(det.d, rec);
  return {{{"status", "found"}, {"recursion", io::to_json(rec)}, {"G", io::to_json(G)},
           {"offset", io::to_json(det.f.offset())}}};
}

Recursion recursion_input(Job& job, const json& in, Artifact* miss) {
  if (in.is_object() && in.contains("a")) {
    Recursion rec = io::recursion_from_json(in, MomentWeight::factorial(1));
    if (!job.opt.weight.empty()) rec.weight = io::parse_weight(job.opt.weight);
    job.params["weight"] = rec.weight.label();
    return rec;
  }
  if (in.is_object() && in.contains("recursion")) return recursion_input(job, in.at("recursion"), miss);
  Detection det = detect_series(job, in);
  if (!found(det.rec)) *miss = {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
  else return std::get<Recursion>(det.rec);
  return {};
}

Artifact cmd_directions(Job& job, const json& in) {
  Artifact miss;
  Recursion rec = recursion_input(job, in, &miss);
  if (miss.code != kOk) return miss;
  json j = io::to_json(singular_directions(rec));
  j["status"] = "found";
  return {j};
}

Artifact cmd_ode(Job& job, const json& in) {
  if (in.is_object() && in.contains("ode")) {
    OdeSpec spec = io::ode_from_json(in.at("ode"));
    FormalPowerSeries f = input_series(in);
    int N = job.opt.order > 0 ? job.opt.order : f.available_order();
    job.params["order"] = N;
    auto cert = ode_to_recursion(spec, f, N);
    if (!found(cert)) return {not_found_json(std::get<NotFound>(cert)), kVerdict};
    json j = io::to_json(std::get<ApproxRecursionCertificate>(cert));
    j["status"] = "found";
    return {j};
  }
  if (in.is_object() && in.contains("a")) {
    Recursion rec = recursion_input(job, in, nullptr);
    if (!in.contains("seeds")) throw Error(ErrorCode::ParseError, "recursion input for ode needs \"seeds\"");
    std::vector<Coefficient> seeds;
    for (const auto& s : in.at("seeds")) seeds.push_back(io::coefficient_from_json(s));
    int N = job.opt.order > 0 ? job.opt.order : 20;
    job.params["order"] = N;
    OdeSpec spec = recursion_to_ode(rec, seeds, N);
    return {{{"status", "found"}, {"recursion", io::to_json(rec)}, {"ode", io::to_json(spec)}}};
  }
  Detection det = detect_series(job, in);
  if (!found(det.rec)) return {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
  const auto& rec = std::get<Recursion>(det.rec);
  int N = job.opt.order > 0 ? job.opt.order : det.f.available_order();
  job.params["order"] = N;
  std::vector<Coefficient> c = det.f.canonical();
  std::vector<Coefficient> seeds(c.begin(), c.begin() + rec.r);
  OdeSpec spec = recursion_to_ode(rec, seeds, N);
  json ode = io::to_json(spec);
  ode["rhs_user"] = io::to_json(user_rhs(spec, det.f, std::min(N, det.f.available_order())));
  return {{{"status", "found"}, {"recursion", io::to_json(rec)}, {"ode", ode}}};
}

// G and the constant term from either a {"G": ...} object or a series.
bool borel_data(Job& job, const json& in, RationalFunction& G, Coefficient& offset, MomentWeight& w,
                Outcome<Recursion>& rec, Artifact& miss) {
  if (in.is_object() && in.contains("G")) {
    G = io::rational_from_json(in.at("G"));
    offset = in.contains("offset") ? io::coefficient_from_json(in.at("offset")) : Coefficient(0);
    w = resolve_weight(job, &in);
    rec = NotFound{NotFoundReason::ZeroSequence, "G given directly"};
    return true;
  }
  Detection det = detect_series(job, in);
  w = det.weight;
  rec = det.rec;
  if (!found(det.rec)) {
    miss = {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
    return false;
  }
  G = rational_reconstruct(det.d, std::get<Recursion>(det.rec));
  offset = det.f.offset();
  return true;
}

Artifact emit_rows(Job& job, const std::vector<Complex>& zs, const std::vector<SumResult>& rs, Complex offset,
                   json extra) {
  Artifact a;
  if (job.opt.format == "csv") a.csv = csv_rows(zs, rs, offset);
  extra["status"] = "found";
  extra["rows"] = rows_json(zs, rs, offset);
  a.result = extra;
  return a;
}

Artifact cmd_sum(Job& job, const json& in) {
  RationalFunction G;
  Coefficient offset;
  MomentWeight w = MomentWeight::unit();
  Outcome<Recursion> rec = NotFound{NotFoundReason::ZeroSequence, ""};
  Artifact miss;
  if (!borel_data(job, in, G, offset, w, rec, miss)) return miss;
  double k = laplace_order(w);
  double d = resolve_direction(job);
  ZGrid grid = resolve_grid(job, d, "0.05,0.2,4");
  QuadratureConfig cfg = quad_config(job);
  resolve_jobs(job);
  std::vector<Complex> zs = grid.points();
  auto rs = laplace_grid(G, d, zs, k, cfg, exec_for(job.opt.jobs), job.opt.jobs);
  return emit_rows(job, zs, rs, offset.to_complex(), {{"G", io::to_json(G)}});
}

Artifact cmd_qsum(Job& job, const json& in) {
  RationalFunction Phi;
  Coefficient offset;
  MomentWeight w = MomentWeight::unit();
  Outcome<Recursion> rec = NotFound{NotFoundReason::ZeroSequence, ""};
  Artifact miss;
  if (!borel_data(job, in, Phi, offset, w, rec, miss)) return miss;
  if (w.kind() != MomentWeight::Kind::QPower)
    throw Error(ErrorCode::WeightKindMismatch, "qsum needs a qpower weight, got " + w.label());
  double d = resolve_direction(job);
  ZGrid grid = resolve_grid(job, d, "0.01,0.05,5");
  QuadratureConfig cfg = quad_config(job);
  resolve_jobs(job);
  int W = job.opt.window > 0 ? job.opt.window : 40;
  job.params["window"] = W;
  std::vector<Complex> zs = grid.points();
  auto rs = q_laplace_grid(Phi, d, zs, w.q_double(), cfg, exec_for(job.opt.jobs), job.opt.jobs);
  json extra = {{"Phi", io::to_json(Phi)}};
  if (found(rec)) {
    std::vector<double> xs{0.3, 0.7, 1.3, 2.9};
    extra["variation_residual"] = variation_check(std::get<Recursion>(rec), Phi, xs, W);
  }
  return emit_rows(job, zs, rs, offset.to_complex(), extra);
}

Artifact cmd_verify(Job& job, const json& in) {
  Detection det = detect_series(job, in);
  if (!found(det.rec)) return {not_found_json(std::get<NotFound>(det.rec)), kVerdict};
  const auto& rec = std::get<Recursion>(det.rec);
  const FormalPowerSeries& f = det.f;
  int N = job.opt.order > 0 ? std::min(job.opt.order, f.available_order()) : f.available_order();
  job.params["order"] = N;
  std::vector<Coefficient> c = f.canonical();
  std::vector<Coefficient> seeds(c.begin(), c.begin() + rec.r);
  OdeSpec spec = recursion_to_ode(rec, seeds, N);
  FormalPowerSeries res = formal_residual(spec, f.canonicalized(), N);
  bool formal_ok = is_formal_solution(spec, f.canonicalized(), N);
  json out = {{"status", "found"},
              {"recursion", io::to_json(rec)},
              {"formal", {{"solution", formal_ok}, {"max_abs_residual", res.max_abs()}}}};
  int code = formal_ok ? kOk : kVerdict;

  double d = resolve_direction(job);
  ZGrid grid = resolve_grid(job, d, "0.05,0.2,4");
  QuadratureConfig cfg = quad_config(job);
  resolve_jobs(job);
  std::vector<Complex> zs = grid.points();
  OdeSpec user = make_ode_spec(spec.kind, spec.P, user_rhs(spec, f, N));
  RationalFunction G = rational_reconstruct(det.d, rec);
  Complex offset = f.offset().to_complex();
  PointEvaluator eval;
  JetEvaluator jet;
  if (det.weight.kind() == MomentWeight::Kind::Factorial && det.weight.s() == 1) {
    BorelLaplaceSum s(G, d, offset, cfg);
    eval = s.evaluator();
    jet = s.jet_evaluator();
  } else if (det.weight.kind() == MomentWeight::Kind::QPower) {
    QLaplaceSum s(G, d, det.weight.q_double(), offset, cfg);
    eval = s.evaluator();
    jet = s.jet_evaluator();
  }
  if (!eval) {
    out["analytic"] = {{"supported", false}};
    return {out, code};
  }
  out["analytic"] = {{"supported", true}, {"max_residual", analytic_residual(user, jet, zs)}};
  int n_max = std::min(N, 10);
  auto asym = asymptotic_check(eval, f, zs, det.weight, n_max);
  if (auto* fit = std::get_if<AsymptoticFit>(&asym)) {
    out["asymptotic"] = {{"ok", true}, {"C", fit->C}, {"A", fit->A}, {"normalized", fit->normalized}};
  } else {
    const auto& fail = std::get<AsymptoticFailure>(asym);
    out["asymptotic"] = {{"ok", false}, {"reason", fail.reason}, {"normalized", fail.normalized}};
    code = kVerdict;
  }
  return {out, code};
}

SequenceM parse_sequence(const std::string& text, int max_index) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "gevrey") return SequenceM::gevrey(std::stod(arg), max_index);
    if (kind == "qpower") return SequenceM::q_power(std::stod(arg), max_index);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad sequence parameter in '" + text + "'");
  }
  if (kind == "constant") return SequenceM::constant(max_index);
  if (kind == "custom") {
    json j = io::parse(read_text(arg), arg);
    return SequenceM::from_values(j.get<std::vector<double>>(), text);
  }
  throw Error(ErrorCode::ParseError, "unknown sequence '" + text + "' (gevrey:s, qpower:q, constant, custom:path)");
}

Artifact cmd_seqdiag(Job& job) {
  DiagnosticsOptions o;
  o.N = job.opt.window > 0 ? job.opt.window : 1000;
  o.horizon = job.opt.horizon;
  o.exec = exec_for(job.opt.jobs);
  std::string text = job.opt.sequence.empty() ? "gevrey:1" : job.opt.sequence;
  SequenceM M = parse_sequence(text, 2 * o.N + o.horizon + 2);
  job.params["sequence"] = text;
  job.params["window"] = o.N;
  job.params["horizon"] = o.horizon;
  resolve_jobs(job);
  Diagnostics diag = diagnose(M, o);
  json j = io::to_json(diag);
  j["sequence"] = M.label();
  j["status"] = diag.mg ? "found" : "failure";
  return {j, diag.mg ? kOk : kVerdict};
}

Artifact cmd_gen(Job& job, const json& in) {
  if (!in.is_object() || !in.contains("a")) throw Error(ErrorCode::ParseError, "gen input needs a recursion object");
  Recursion rec = recursion_input(job, in, nullptr);
  if (!in.contains("seeds")) throw Error(ErrorCode::ParseError, "gen input needs \"seeds\"");
  std::vector<Coefficient> seeds;
  for (const auto& s : in.at("seeds")) seeds.push_back(io::coefficient_from_json(s));
  int N = job.opt.order > 0 ? job.opt.order : 40;
  job.params["order"] = N;
  FormalPowerSeries f = generate_from_recursion(rec, seeds, rec.weight, N);
  return {{{"status", "found"}, {"recursion", io::to_json(rec)}, {"series", io::to_json(f)}}};
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("summa", sink);
  const char* env = std::getenv("SUMMA_LOG");
  log->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  return log;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  Options& o = job.opt;
  CLI::App app{"Borel-Laplace and q-Laplace summation of divergent series", "summa"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* c, bool input = true) {
    if (input) c->add_option("--input", o.input, "series/recursion JSON: a path or inline text")->required();
    c->add_option("--output", o.output, "output path (stdout when absent)");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_weight = [&](CLI::App* c) {
    c->add_option("--weight", o.weight, "factorial:s | qpower:q | custom:path");
    c->add_option("--tol", o.tol, "detection tolerance (quadrature rel_tol for sums)");
  };
  auto add_sum = [&](CLI::App* c) {
    c->add_option("--direction", o.direction, "ray argument in radians, or deg:<degrees>");
    c->add_option("--zgrid", o.zgrid, "start,stop,count[,arg]");
    c->add_option("--jobs", o.jobs, "worker threads (1 = serial, 0 = all)");
  };

  auto* detect = app.add_subcommand("detect", "minimal recursion of f_p / w_p");
  add_io(detect), add_weight(detect);
  detect->add_option("--approx-rmax", o.approx_rmax, "fit an approximate recursion up to this order");
  auto* reconstruct = app.add_subcommand("reconstruct", "rational Borel transform");
  add_io(reconstruct), add_weight(reconstruct);
  auto* directions = app.add_subcommand("directions", "singular directions");
  add_io(directions), add_weight(directions);
  auto* ode = app.add_subcommand("ode", "recursion <-> equation");
  add_io(ode), add_weight(ode);
  ode->add_option("--order", o.order, "rhs / check order N");
  auto* sum = app.add_subcommand("sum", "Borel-Laplace sums over a z-grid");
  add_io(sum), add_weight(sum), add_sum(sum);
  auto* qsum = app.add_subcommand("qsum", "q-Laplace sums over a z-grid plus the variation check");
  add_io(qsum), add_weight(qsum), add_sum(qsum);
  qsum->add_option("--window", o.window, "variation window W (|n| <= W)");
  auto* verify = app.add_subcommand("verify", "formal, analytic and asymptotic checks");
  add_io(verify), add_weight(verify), add_sum(verify);
  verify->add_option("--order", o.order, "series order used by the checks");
  auto* seqdiag = app.add_subcommand("seqdiag", "strongly regular sequence diagnostics");
  add_io(seqdiag, false);
  seqdiag->add_option("--sequence", o.sequence, "gevrey:s | qpower:q | constant | custom:path");
  seqdiag->add_option("--window", o.window, "window N");
  seqdiag->add_option("--horizon", o.horizon, "snq tail horizon");
  seqdiag->add_option("--jobs", o.jobs, "worker threads (1 = serial, 0 = all)");
  auto* gen = app.add_subcommand("gen", "coefficients from a recursion and seeds");
  add_io(gen), add_weight(gen);
  gen->add_option("--order", o.order, "last coefficient index N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kError;
  }

  job.log = make_logger(err);
  job.command = app.get_subcommands().front()->get_name();
  job.params = {{"command", job.command}, {"format", o.format}};
  if (o.format == "csv" && job.command != "sum" && job.command != "qsum") {
    err << "error: ParseError: --format csv applies to sum and qsum only\n";
    return kError;
  }

  Artifact art;
  try {
    json in;
    if (!o.input.empty()) {
      in = load_input(o.input);
      job.params["input"] = is_inline(o.input) ? in : json(o.input);
    }
    const std::string& c = job.command;
    if (c == "detect") art = cmd_detect(job, in);
    else if (c == "reconstruct") art = cmd_reconstruct(job, in);
    else if (c == "directions") art = cmd_directions(job, in);
    else if (c == "ode") art = cmd_ode(job, in);
    else if (c == "sum") art = cmd_sum(job, in);
    else if (c == "qsum") art = cmd_qsum(job, in);
    else if (c == "verify") art = cmd_verify(job, in);
    else if (c == "seqdiag") art = cmd_seqdiag(job);
    else art = cmd_gen(job, in);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kError;
  }

  std::string payload;
  if (!art.csv.empty()) {
    payload = "# " + std::string(io::kSchema) + " " + job.params.dump() + "\n" + art.csv;
  } else {
    json env = {{"schema", io::kSchema}, {"command", job.command}, {"params", job.params}, {"result", art.result}};
    payload = env.dump(2) + "\n";
  }
  if (o.output.empty()) {
    out << payload;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write '" << o.output << "'\n";
      return kError;
    }
    f << payload;
  }
  job.log->info("{} finished with exit code {}", job.command, art.code);
  return art.code;
}

}  // namespace summa::cli
