#include "isocert/cli/pipeline.hpp"

#include <cmath>

namespace isocert::cli {

namespace {

using exactalg::Rational;

Ingredient from_records(std::string name, std::vector<json> records) {
  Ingredient in{std::move(name), "passed", std::move(records)};
  for (const auto& r : in.records) {
    if (r.contains("status") && r["status"] == "inconclusive") {
      if (in.verdict == "passed") in.verdict = "inconclusive";
    } else if (!record_passes(r)) {
      in.verdict = "failed";
    }
  }
  return in;
}

}  // namespace

PipelineSummary run_pipeline(const PipelineParams& p) {
  const configsolve::ScalarParams params{Rational::parse(p.S), configsolve::Surd::parse(p.A3)};
  const double S = params.S.to_double();
  const double a3 = params.A3.enclosure().mid();
  const double tau = p.tau > 0.0 ? p.tau : 0.05 * std::sqrt(S);
  const double delta = p.delta > 0.0 ? p.delta : p.delta1;
  PipelineSummary s;

  std::vector<json> ids;
  for (const auto& r : frameforms::verify_all(frameforms::CurvatureMode::Symbolic, p.threads)) ids.push_back(identity_json(r));
  s.ingredients.push_back(from_records("identities", std::move(ids)));

  std::vector<json> li;
  {
    json j = record("exact-evaluation", "L_i_at_-3_-1_1_3", "form-derivative");
    const auto L = certify::L_at({Rational(-3), Rational(-1), Rational(1), Rational(3)});
    json vals = json::array();
    bool neg = true;
    for (const auto& v : L) {
      vals.push_back(v.to_string());
      neg = neg && v.sign() < 0;
    }
    j["values"] = vals;
    j["pass"] = neg && L[0] == Rational(-1);
    li.push_back(j);
    const auto cert = certify::certify_Li_negative(S, tau, 1e-9, 20, p.threads);
    json cj = certificate_json(cert, "li", "form-derivative", {{"S", S}, {"tau", tau}, {"margin", 1e-9}});
    const auto cc = certify::li_cross_check(S, tau, p.li_samples, p.seed);
    cj["cross_check"] = {{"drawn", cc.drawn}, {"feasible", cc.feasible}, {"violations", cc.violations}};
    if (cc.violations > 0) cj["pass"] = false;
    li.push_back(cj);
  }
  s.ingredients.push_back(from_records("L_i_signs", std::move(li)));

  std::vector<json> band;
  for (const auto& q : certify::band_quantities()) {
    certify::BandOptions o;
    o.a3 = a3;
    o.threads = p.threads;
    const auto c = certify::certify_band_bounds(q, S, p.eps0, p.delta1, o);
    const std::string anchor = q.back() == 'f' || q == "m1" ? "dk9" : "dk7";
    band.push_back(certificate_json(c, "band:" + q, anchor, {{"S", S}, {"A3", a3}, {"eps0", p.eps0}, {"delta1", p.delta1}}));
  }
  s.ingredients.push_back(from_records("band_bounds", std::move(band)));

  const mollify::Mollifier moll(delta);
  s.ingredients.push_back(from_records(
      "mollifier", {properties_json("mollifier", "lem-pre-1", mollify::check_mollifier(moll, p.property_samples),
                                    {{"delta", delta}, {"samples", p.property_samples}})}));
  s.ingredients.push_back(from_records(
      "K", {properties_json("K", "prop4", mollify::check_K(p.eps0, delta, p.k_samples, p.seed),
                            {{"eps0", p.eps0}, {"delta", delta}, {"samples", p.k_samples}, {"seed", p.seed}})}));
  const mollify::Cutoff cut(p.eps0);
  json cj = properties_json("cutoff", "con", mollify::check_cutoff(cut, p.property_samples),
                            {{"eps", p.eps0}, {"samples", p.property_samples}});
  cj["slope_constant"] = cut.slope_constant();
  s.ingredients.push_back(from_records("cutoff", {cj}));

  const auto ok = certify::certify_okumura(4, 1e-6, 1e-3, 48, p.threads);
  s.ingredients.push_back(from_records(
      "okumura", {certificate_json(ok, "okumura", "lem-p2-1", {{"n", 4}, {"tol", 1e-6}, {"radius", 1e-3}})}));

  s.ingredients.push_back(
      from_records("branch_identities", {branch_json(configsolve::case_branch_identities(params), params)}));

  std::vector<json> configs;
  for (auto tag : {configsolve::SystemTag::I, configsolve::SystemTag::II, configsolve::SystemTag::III}) {
    for (const auto& c : configsolve::solve_system(tag, params)) configs.push_back(config_json(c, params));
  }
  s.ingredients.push_back(from_records("coincidence_systems", std::move(configs)));

  s.pass = true;
  for (const auto& in : s.ingredients) {
    if (in.verdict == "failed") {
      s.pass = false;
      s.failures.push_back(in.name);
    } else if (in.verdict == "inconclusive") {
      s.pass = false;
      s.inconclusive = true;
      s.failures.push_back(in.name + " (inconclusive)");
    }
  }
  s.verdict = s.pass ? "all algebraic ingredients verified" : "unverified ingredients present";
  return s;
}

json pipeline_json(const PipelineSummary& s, const PipelineParams& p) {
  json head = record("pipeline-summary", "pipeline", "con");
  head["parameters"] = {{"S", p.S}, {"A3", p.A3}, {"eps0", p.eps0}, {"delta1", p.delta1}, {"seed", p.seed}};
  json ing = json::array();
  for (const auto& in : s.ingredients) ing.push_back({{"name", in.name}, {"verdict", in.verdict}, {"records", in.records.size()}});
  head["ingredients"] = ing;
  head["pass"] = s.pass;
  head["verdict"] = s.verdict;
  head["failures"] = s.failures;
  json out = json::array({head});
  for (const auto& in : s.ingredients)
    for (const auto& r : in.records) out.push_back(r);
  return out;
}

}  // namespace isocert::cli
