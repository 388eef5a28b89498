#include "isocert/cli/reports.hpp"

#include <algorithm>

namespace isocert::cli {

namespace {

json box_json(const certify::Box& b) { return json::array({to_json(b.x), to_json(b.y)}); }

}  // namespace

json record(const std::string& kind, const std::string& name, const std::string& anchor) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"name", name}, {"anchor", anchor}};
}

json to_json(const certify::Interval& x) { return json::array({x.lo(), x.hi()}); }

json identity_json(const frameforms::IdentityReport& r) {
  json j = record("identity", r.name, r.anchor);
  j["mode"] = frameforms::to_string(r.mode);
  j["pass"] = r.pass;
  j["residual_is_zero"] = r.residual.is_zero();
  j["residual_term_count"] = r.residual.num().term_count();
  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  json extracted = json::object();
  for (const auto& [name, f] : r.extracted) extracted[name] = f.to_string();
  j["extracted"] = extracted;
  return j;
}

json config_json(const configsolve::CurvatureConfig& c, const configsolve::ScalarParams& p) {
  json j = record("config", "system-" + configsolve::to_string(c.tag), "p1");
  j["parameters"] = {{"S", p.S.to_string()}, {"A3", p.A3.to_string()}};
  j["variable"] = c.variable;
  j["defining_poly"] = c.defining_poly.to_string(c.variable);
  j["root"] = json::array({c.root.lo.to_string(), c.root.hi.to_string()});
  json lam = json::array();
  for (const auto& l : c.lambdas) lam.push_back(to_json(l));
  j["lambdas"] = lam;
  json ps = json::array();
  for (const auto& s : c.power_sums) ps.push_back(to_json(s));
  j["power_sums"] = ps;
  j["multiplicities"] = c.multiplicities;
  j["flags"] = c.flags;
  j["discriminant_vanishes"] = c.discriminant_vanishes ? json(*c.discriminant_vanishes) : json(nullptr);
  j["verified"] = c.verified;
  j["pass"] = c.verified && c.discriminant_vanishes.value_or(true);
  return j;
}

json branch_json(const configsolve::BranchIdentityReport& r, const configsolve::ScalarParams& p) {
  json j = record("branch-identities", "lam3_eq_lam4_branch", "p1");
  j["parameters"] = {{"S", p.S.to_string()}, {"A3", p.A3.to_string()}};
  j["p1_identity"] = r.p1_identity;
  j["p2_identity"] = r.p2_identity;
  j["p3_identity"] = r.p3_identity;
  j["p3_reduced"] = r.p3_reduced;
  j["negativity"] = r.negativity;
  j["negativity_factors"] = r.negativity_factors;
  j["pattern_identity"] = r.pattern_identity;
  j["contradicts_params"] = r.contradicts_params;
  j["pass"] = r.pass();
  return j;
}

json certificate_json(const certify::Certificate& c, const std::string& name, const std::string& anchor,
                      const json& parameters) {
  json j = record("certificate", name, anchor);
  j["parameters"] = parameters;
  j["claim"] = c.claim;
  j["region"] = c.region;
  j["status"] = certify::to_string(c.status);
  j["pass"] = c.status == certify::Status::Proved;
  j["margin_achieved"] = c.margin_achieved;
  j["cells_processed"] = c.cells_processed;
  j["max_depth"] = c.max_depth;
  json off = json::array();
  for (const auto& b : c.offending) off.push_back(box_json(b));
  j["offending"] = off;
  j["offending_total"] = c.offending_total;
  json values = json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  j["values"] = values;
  j["note"] = c.note;
  return j;
}

json properties_json(const std::string& name, const std::string& anchor, const std::vector<mollify::PropertyCheck>& checks,
                     const json& parameters) {
  json j = record("properties", name, anchor);
  j["parameters"] = parameters;
  json arr = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"samples", c.samples}, {"worst", c.worst}});
    pass = pass && c.pass;
  }
  j["checks"] = arr;
  j["pass"] = pass;
  return j;
}

json model_json(const geomex::ModelHypersurface& m) {
  json j = record("model", m.name, "thm1");
  json curv = json::array();
  for (const auto& c : m.curvatures) {
    curv.push_back({{"value", c.value.value.to_string()},
                    {"minimal_polynomial", c.value.minimal_polynomial.to_string()},
                    {"isolating_interval", json::array({c.value.lo.to_string(), c.value.hi.to_string()})},
                    {"enclosure", json::array({c.value.lo_d, c.value.hi_d})},
                    {"multiplicity", c.multiplicity}});
  }
  j["principal_curvatures"] = curv;
  json ps = json::array();
  for (const auto& p : m.power_sums) {
    ps.push_back({{"value", p.value.to_string()}, {"enclosure", json::array({p.lo_d, p.hi_d})}});
  }
  j["power_sums"] = ps;
  j["S"] = m.S.to_string();
  j["A3"] = m.A3.to_string();
  j["R_M"] = m.R_M.to_string();
  j["sum_h2"] = m.sum_h2.to_string();
  j["distinct"] = m.distinct();
  j["isoparametric"] = m.isoparametric;
  j["okumura_bound"] = m.okumura_bound();
  j["okumura_equality"] = m.okumura_equality();
  j["pass"] = m.power_sums[0].value == geomex::QuadNumber(geomex::Rational(0)) && m.okumura_bound();
  return j;
}

json model_report_json(const geomex::ModelReport& r) {
  json j = record("model-check", r.model + "/theorem-" + std::to_string(r.theorem), r.anchor);
  j["model"] = r.model;
  j["theorem"] = r.theorem;
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name},
                       {"role", geomex::to_string(c.role)},
                       {"status", geomex::to_string(c.status)},
                       {"detail", c.detail}});
  }
  j["clauses"] = clauses;
  j["verdict"] = geomex::to_string(r.verdict);
  j["cross_reference"] = r.cross_reference;
  j["max_enclosure_width"] = r.max_enclosure_width;
  j["pass"] = r.verdict == geomex::ModelVerdict::Consistent || r.verdict == geomex::ModelVerdict::Vacuous;
  return j;
}

bool record_passes(const json& r) { return r.contains("pass") && r["pass"].is_boolean() && r["pass"].get<bool>(); }

std::string text_summary(const json& records) {
  std::string out;
  for (const auto& r : records) {
    std::string verdict = record_passes(r) ? "PASS" : "FAIL";
    if (r.contains("status")) verdict = r["status"].get<std::string>();
    if (r.contains("verdict")) verdict = r["verdict"].get<std::string>();
    out += verdict + "  " + r.value("kind", std::string()) + "  " + r.value("name", std::string()) + "  [" +
           r.value("anchor", std::string()) + "]";
    if (r.contains("mode")) out += "  " + r["mode"].get<std::string>();
    if (r.contains("margin_achieved")) out += "  margin=" + r["margin_achieved"].dump();
    out += '\n';
  }
  return out;
}

}  // namespace isocert::cli
