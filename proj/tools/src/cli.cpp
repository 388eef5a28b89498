#include "isocert/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "isocert/cli/pipeline.hpp"
#include "isocert/cli/reports.hpp"
#include "isocert/errors.hpp"

namespace isocert::cli {

namespace {

using exactalg::Rational;

struct Options {
  std::string config;
  unsigned threads = 1;
  std::string out = "reports";
  std::string format = "text";

  std::string which = "all";
  std::string mode = "symbolic";

  std::string system = "all";
  std::string solve_S;
  std::string solve_A3 = "0";
  double precision = 1e-12;

  std::string kind;
  double S = 0.0;
  double tau = 0.0;
  double margin = 1e-9;
  double eps0 = 0.1;
  double delta1 = 0.05;
  int max_depth = 0;
  int min_depth = 10;
  double tol = 1e-6;
  double radius = 1e-3;
  int n = 4;
  std::string quantity = "all";
  std::string band_A3;
  double a3_floor = 0.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 20240229;

  double delta = 0.0;
  std::size_t fn_samples = 10000;
  std::string emit = "json";
  double eps = 0.0;

  bool list = false;
  std::string check;
  int theorem = 0;

  PipelineParams pipeline;

  CLI::Option* tau_opt = nullptr;
  CLI::Option* band_A3_opt = nullptr;
  CLI::Option* a3_floor_opt = nullptr;
  CLI::Option* max_depth_opt = nullptr;
};

struct Output {
  std::string stem;
  json records = json::array();
  /// Replaces the text summary on stdout and is written next to the report.
  std::string csv;
};

/// strict = false defers required options to the pass that has seen the config file.
void build(CLI::App& app, Options& o, bool strict = true) {
  app.name("isocert");
  app.description("Exact and certified checks for minimal hypersurfaces of S^5 with constant S and A3");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config, "flat key = value file mirroring the flags of the subcommand");
  app.add_option("--threads", o.threads, "worker threads (default: ISOCERT_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "directory for JSON reports");
  app.add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  auto* vi = app.add_subcommand("verify-identities", "symbolic identities of the moving-frame computation");
  vi->add_option("--which", o.which, "identity name or all");
  vi->add_option("--mode", o.mode, "curvature symbols")->check(CLI::IsMember({"symbolic", "expanded", "both"}));

  auto* so = app.add_subcommand("solve", "principal-curvature configurations of the coincidence systems");
  so->add_option("--system", o.system, "I, II, III or all")->check(CLI::IsMember({"I", "II", "III", "all"}));
  so->add_option("--S", o.solve_S, "S as a rational")->required(strict);
  so->add_option("--A3", o.solve_A3, "A3 as r or r*sqrt(m)");
  so->add_option("--precision", o.precision, "enclosure width target")->check(CLI::PositiveNumber);

  auto* ce = app.add_subcommand("certify", "interval branch-and-bound certificates");
  ce->add_option("kind", o.kind, "li, okumura or band")->required(strict)->check(CLI::IsMember({"li", "okumura", "band"}));
  ce->add_option("--S", o.S, "S");
  o.tau_opt = ce->add_option("--tau", o.tau, "minimal gap (li; default 0.05 sqrt(S))");
  ce->add_option("--margin", o.margin, "required negativity margin (li)");
  ce->add_option("--eps0", o.eps0, "band floor eps0");
  ce->add_option("--delta1", o.delta1, "band width delta1");
  o.max_depth_opt = ce->add_option("--max-depth", o.max_depth, "bisection depth limit");
  ce->add_option("--min-depth", o.min_depth, "band refinement floor");
  ce->add_option("--tol", o.tol, "slack tolerance (okumura)");
  ce->add_option("--radius", o.radius, "equality-point radius (okumura)");
  ce->add_option("--n", o.n, "dimension (okumura)");
  ce->add_option("--quantity", o.quantity, "band quantity or all");
  o.band_A3_opt = ce->add_option("--A3", o.band_A3, "restrict the band to the level set p3 = A3");
  o.a3_floor_opt = ce->add_option("--A3-floor", o.a3_floor, "restrict the band to p3 >= floor");
  ce->add_option("--samples", o.samples, "random cross-check points (li)");
  ce->add_option("--seed", o.seed, "cross-check seed (li)");

  auto* mo = app.add_subcommand("mollifier", "smoothing of |t| and its properties");
  mo->add_option("--delta", o.delta, "width delta")->required(strict);
  mo->add_option("--samples", o.fn_samples, "sample count");
  mo->add_option("--emit", o.emit, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* cu = app.add_subcommand("cutoff", "smooth cutoff eta_eps and its properties");
  cu->add_option("--eps", o.eps, "scale eps")->required(strict);
  cu->add_option("--samples", o.fn_samples, "sample count");
  cu->add_option("--emit", o.emit, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* ex = app.add_subcommand("examples", "model hypersurfaces against the theorems");
  ex->add_flag("--list", o.list, "list the catalog");
  ex->add_option("--check", o.check, "model name or all");
  ex->add_option("--theorem", o.theorem, "1, 2 or 3 (default: all)")->check(CLI::Range(1, 3));

  auto* pi = app.add_subcommand("pipeline", "every certified ingredient for one (S, A3)");
  pi->add_option("--S", o.pipeline.S, "S as a rational")->required(strict);
  pi->add_option("--A3", o.pipeline.A3, "A3 as r or r*sqrt(m)");
  pi->add_option("--eps0", o.pipeline.eps0, "eps0");
  pi->add_option("--delta1", o.pipeline.delta1, "delta1");
  pi->add_option("--delta", o.pipeline.delta, "mollifier width (default delta1)");
  pi->add_option("--tau", o.pipeline.tau, "L_i minimal gap (default 0.05 sqrt(S))");
  pi->add_option("--li-samples", o.pipeline.li_samples, "L_i cross-check points");
  pi->add_option("--samples", o.pipeline.property_samples, "mollifier and cutoff samples");
  pi->add_option("--k-samples", o.pipeline.k_samples, "random gap pairs for K");
  pi->add_option("--seed", o.pipeline.seed, "seed");
}

void parse(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
}

/// Flags missing from the command line, taken from the config file.
std::vector<std::string> config_args(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  CLI::App* sub = app.get_subcommands().front();
  std::vector<std::string> extra;
  for (const auto& item : CLI::ConfigTOML().from_config(in)) {
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    if (!item.parents.empty() || key == "config" || item.inputs.size() != 1) {
      throw CLI::ValidationError("--config", "unsupported key '" + item.fullname() + "'");
    }
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr) throw CLI::ValidationError("--config", "unknown key '" + key + "'");
    if (opt->count() == 0) extra.push_back("--" + key + "=" + item.inputs.front());
  }
  return extra;
}

Output verify_identities(const Options& o) {
  Output r;
  r.stem = "verify-identities";
  std::vector<frameforms::CurvatureMode> modes;
  if (o.mode != "expanded") modes.push_back(frameforms::CurvatureMode::Symbolic);
  if (o.mode != "symbolic") modes.push_back(frameforms::CurvatureMode::Expanded);
  for (auto m : modes) {
    if (o.which == "all") {
      for (const auto& rep : frameforms::verify_all(m, o.threads)) r.records.push_back(identity_json(rep));
    } else {
      r.records.push_back(identity_json(frameforms::verify_identity(o.which, m)));
    }
  }
  return r;
}

Output solve(const Options& o) {
  Output r;
  r.stem = "solve";
  const configsolve::ScalarParams p{Rational::parse(o.solve_S), configsolve::Surd::parse(o.solve_A3)};
  std::vector<configsolve::SystemTag> tags;
  if (o.system == "all") {
    tags = {configsolve::SystemTag::I, configsolve::SystemTag::II, configsolve::SystemTag::III};
  } else {
    tags = {configsolve::parse_system(o.system)};
  }
  for (auto t : tags)
    for (const auto& c : configsolve::solve_system(t, p, o.precision)) r.records.push_back(config_json(c, p));
  return r;
}

Output certify_cmd(const Options& o, const CLI::App& sub) {
  Output r;
  r.stem = "certify-" + o.kind;
  if (o.kind == "okumura") {
    const int depth = o.max_depth_opt->count() ? o.max_depth : 48;
    const auto c = certify::certify_okumura(o.n, o.tol, o.radius, depth, o.threads);
    r.records.push_back(certificate_json(c, "okumura", "lem-p2-1",
                                         {{"n", o.n}, {"tol", o.tol}, {"radius", o.radius}, {"max_depth", depth}}));
    return r;
  }
  if (sub.get_option("--S")->count() == 0) throw CLI::RequiredError("--S");
  if (o.kind == "li") {
    const double tau = o.tau_opt->count() ? o.tau : 0.05 * std::sqrt(o.S);
    const int depth = o.max_depth_opt->count() ? o.max_depth : 20;
    json ev = record("exact-evaluation", "L_i_at_-3_-1_1_3", "form-derivative");
    const auto L = certify::L_at({Rational(-3), Rational(-1), Rational(1), Rational(3)});
    json vals = json::array();
    bool neg = true;
    for (const auto& v : L) {
      vals.push_back(v.to_string());
      neg = neg && v.sign() < 0;
    }
    ev["values"] = vals;
    ev["pass"] = neg && L[0] == Rational(-1);
    r.records.push_back(ev);
    const auto c = certify::certify_Li_negative(o.S, tau, o.margin, depth, o.threads);
    json j = certificate_json(c, "li", "form-derivative",
                              {{"S", o.S}, {"tau", tau}, {"margin", o.margin}, {"max_depth", depth}});
    if (o.samples > 0) {
      const auto cc = certify::li_cross_check(o.S, tau, o.samples, o.seed);
      j["cross_check"] = {{"drawn", cc.drawn}, {"feasible", cc.feasible}, {"violations", cc.violations}, {"seed", o.seed}};
      if (cc.violations > 0) j["pass"] = false;
    }
    r.records.push_back(j);
    return r;
  }
  certify::BandOptions opt;
  opt.max_depth = o.max_depth_opt->count() ? o.max_depth : 18;
  opt.min_depth = o.min_depth;
  opt.threads = o.threads;
  json params{{"S", o.S}, {"eps0", o.eps0}, {"delta1", o.delta1}, {"max_depth", opt.max_depth}, {"min_depth", opt.min_depth}};
  if (o.band_A3_opt->count()) {
    opt.a3 = configsolve::Surd::parse(o.band_A3).enclosure().mid();
    params["A3"] = o.band_A3;
  }
  if (o.a3_floor_opt->count()) {
    opt.a3_floor = o.a3_floor;
    params["A3_floor"] = o.a3_floor;
  }
  std::vector<std::string> qs;
  if (o.quantity == "all") {
    qs = certify::band_quantities();
  } else {
    qs = {o.quantity};
  }
  for (const auto& q : qs) {
    const auto c = certify::certify_band_bounds(q, o.S, o.eps0, o.delta1, opt);
    r.records.push_back(certificate_json(c, "band:" + q, q.back() == 'f' || q == "m1" ? "dk9" : "dk7", params));
  }
  return r;
}

Output mollifier_cmd(const Options& o) {
  Output r;
  r.stem = "mollifier";
  const mollify::Mollifier m(o.delta);
  json j = properties_json("mollifier", "lem-pre-1", mollify::check_mollifier(m, o.fn_samples),
                           {{"delta", o.delta}, {"samples", o.fn_samples}});
  j["h0"] = m.h(0.0);
  j["bump_mass"] = m.bump_mass();
  j["quadrature_error_bound"] = m.error_bound();
  r.records.push_back(j);
  if (o.emit == "csv") r.csv = mollify::mollifier_csv(m, o.fn_samples);
  return r;
}

Output cutoff_cmd(const Options& o) {
  Output r;
  r.stem = "cutoff";
  const mollify::Cutoff c(o.eps);
  json j = properties_json("cutoff", "con", mollify::check_cutoff(c, o.fn_samples), {{"eps", o.eps}, {"samples", o.fn_samples}});
  j["slope_constant"] = c.slope_constant();
  j["quadrature_error_bound"] = c.error_bound();
  r.records.push_back(j);
  if (o.emit == "csv") r.csv = mollify::cutoff_csv(c, o.fn_samples);
  return r;
}

Output examples_cmd(const Options& o) {
  Output r;
  r.stem = "examples";
  if (o.list || o.check.empty()) {
    for (const auto& n : geomex::model_names()) r.records.push_back(model_json(geomex::model_by_name(n)));
    return r;
  }
  std::vector<std::string> names;
  if (o.check == "all") {
    names = geomex::model_names();
  } else {
    names = {o.check};
  }
  for (const auto& n : names) {
    const auto m = geomex::model_by_name(n);
    for (int t = 1; t <= 3; ++t) {
      if (o.theorem == 0 || o.theorem == t) r.records.push_back(model_report_json(geomex::check_model(m, t)));
    }
  }
  return r;
}

int exit_code(const json& records) {
  bool failed = false;
  bool inconclusive = false;
  bool discrepancy = false;
  for (const auto& rec : records) {
    if (record_passes(rec)) continue;
    if (rec.value("status", std::string()) == "inconclusive") {
      inconclusive = true;
    } else if (rec.value("verdict", std::string()) == "documented-discrepancy") {
      discrepancy = true;
    } else {
      failed = true;
    }
  }
  if (failed) return kExitFailure;
  if (inconclusive) return kExitInconclusive;
  if (discrepancy) return kExitDocumentedDiscrepancy;
  return kExitOk;
}

void persist(const Options& o, const Output& r) {
  namespace fs = std::filesystem;
  const fs::path dir(o.out);
  fs::create_directories(dir);
  std::ofstream(dir / (r.stem + ".json")) << r.records.dump(2) << '\n';
  if (!r.csv.empty()) std::ofstream(dir / (r.stem + ".csv")) << r.csv;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("ISOCERT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_threads();
  auto app = std::make_unique<CLI::App>("isocert");
  const bool has_config = std::any_of(args.begin(), args.end(),
                                      [](const std::string& a) { return a == "--config" || a.starts_with("--config="); });
  build(*app, o, !has_config);
  try {
    parse(*app, args);
    if (has_config) {
      std::vector<std::string> full = args;
      const auto extra = config_args(*app, o.config);
      full.insert(full.end(), extra.begin(), extra.end());
      o = Options{};
      o.threads = default_threads();
      app = std::make_unique<CLI::App>("isocert");
      build(*app, o);
      parse(*app, full);
    }
  } catch (const CLI::CallForHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app->exit(e, err, err);
    err << app->help();
    return kExitUsage;
  }

  CLI::App* sub = app->get_subcommands().front();
  const std::string name = sub->get_name();
  Output r;
  try {
    if (name == "verify-identities") {
      r = verify_identities(o);
    } else if (name == "solve") {
      r = solve(o);
    } else if (name == "certify") {
      r = certify_cmd(o, *sub);
    } else if (name == "mollifier") {
      r = mollifier_cmd(o);
    } else if (name == "cutoff") {
      r = cutoff_cmd(o);
    } else if (name == "examples") {
      r = examples_cmd(o);
    } else {
      o.pipeline.threads = o.threads;
      const auto s = run_pipeline(o.pipeline);
      r.stem = "pipeline";
      r.records = pipeline_json(s, o.pipeline);
    }
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << sub->help();
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n' << sub->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }

  persist(o, r);
  if (!r.csv.empty()) {
    out << r.csv;
  } else if (o.format == "json") {
    out << r.records.dump(2) << '\n';
  } else {
    out << text_summary(r.records);
  }
  return exit_code(r.records);
}

}  // namespace isocert::cli
