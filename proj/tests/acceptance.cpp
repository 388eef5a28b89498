// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grid_oracle.hpp"
#include "isocert/certify/certify.hpp"
#include "isocert/cli/cli.hpp"
#include "isocert/configsolve/configsolve.hpp"
#include "isocert/frameforms/identities.hpp"
#include "isocert/geomex/geomex.hpp"
#include "isocert/mollify/mollify.hpp"

namespace fs = std::filesystem;
using namespace isocert;
using exactalg::Rational;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double cert_value(const certify::Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c.values)
    if (k == key) return v;
  return NAN;
}

Outcome identities() {
  const auto t0 = std::chrono::steady_clock::now();
  int passed = 0, total = 0;
  for (auto mode : {frameforms::CurvatureMode::Symbolic, frameforms::CurvatureMode::Expanded}) {
    for (const auto& r : frameforms::verify_all(mode)) {
      ++total;
      if (r.pass && r.residual.is_zero()) ++passed;
    }
  }
  const double dt = seconds_since(t0);
  return {passed == total && total == 26 && dt < 60.0,
          std::to_string(passed) + "/" + std::to_string(total) + " zero residuals in " + fmt("%.2f s", dt)};
}

Outcome li_at_spectrum() {
  const auto L = certify::L_at({Rational(-3), Rational(-1), Rational(1), Rational(3)});
  bool neg = true;
  std::string vals;
  for (const auto& v : L) {
    neg = neg && v.sign() < 0;
    vals += (vals.empty() ? "" : ", ") + v.to_string();
  }
  return {L[0] == Rational(-1) && neg, "L = (" + vals + ")"};
}

Outcome li_certificate() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = certify::certify_Li_negative(8.0, 0.05, 1e-9, 20);
  const double dt = seconds_since(t0);
  const auto cc = certify::li_cross_check(8.0, 0.05, 100000);
  return {c.status == certify::Status::Proved && c.max_depth <= 20 && dt < 300.0 && cc.violations == 0,
          certify::to_string(c.status) + ", depth " + std::to_string(c.max_depth) + ", " + fmt("%.2f s", dt) +
              ", cross-check " + std::to_string(cc.feasible) + " feasible / " + std::to_string(cc.violations) +
              " violations"};
}

Outcome okumura() {
  const auto c = certify::certify_okumura(4, 1e-6);
  const double k = cert_value(c, "equality_constant");
  const double dist = cert_value(c, "max_low_slack_distance");
  return {c.status == certify::Status::Proved && std::abs(k - 1.0 / std::sqrt(3.0)) < 1e-12 && dist <= 1e-3,
          certify::to_string(c.status) + ", constant " + fmt("%.6f", k) + ", low-slack distance " + fmt("%.2e", dist)};
}

Outcome evenly_spaced() {
  using configsolve::SystemTag;
  const configsolve::ScalarParams p{Rational(12), configsolve::Surd{Rational(0)}};
  const auto cs = configsolve::solve_system(SystemTag::I, p);
  const double gap = 2.0 * std::sqrt(3.0 / 5.0);
  bool found = false;
  for (const auto& c : cs) {
    bool even = true;
    for (int i = 0; i < 3; ++i) even = even && std::abs((c.lambdas[i + 1] - c.lambdas[i]).mid() - gap) < 1e-12;
    const bool residual = c.power_sums[0].mag() < 1e-12 && std::abs(c.power_sums[1].mid() - 12.0) < 1e-12 &&
                          c.power_sums[2].mag() < 1e-12;
    found = found || (even && residual && c.verified);
  }
  bool counts = static_cast<int>(cs.size()) == oracle::grid_count(SystemTag::I, 12.0, 0.0);
  std::string detail = std::to_string(cs.size()) + " solutions for (I, 12, 0)";
  const double grid[][2] = {{8.0, 1.0}, {6.0, 0.5}, {10.0, 2.0}, {8.0, -2.0}};
  for (auto tag : {SystemTag::I, SystemTag::II, SystemTag::III}) {
    for (const auto& sa : grid) {
      const configsolve::ScalarParams q{Rational::from_double(sa[0]), configsolve::Surd{Rational::from_double(sa[1])}};
      counts = counts && static_cast<int>(configsolve::solve_system(tag, q).size()) ==
                             oracle::grid_count(tag, sa[0], sa[1]);
    }
  }
  detail += counts ? ", grid-oracle counts agree" : ", grid-oracle count mismatch";
  return {found && counts, detail + (found ? ", gap 2sqrt(3/5) found" : ", gap not found")};
}

Outcome branch() {
  bool ok = true;
  for (const char* S : {"4.5", "6", "8", "12"}) {
    const auto r = configsolve::case_branch_identities({Rational::parse(S), configsolve::Surd{Rational(1)}});
    ok = ok && r.pass();
  }
  return {ok, "p3 identity, negativity and 3 p3^2 = p2^3 at S in {4.5, 6, 8, 12}"};
}

Outcome landmarks() {
  using geomex::QuadNumber;
  double width = 0.0;
  auto widest = [&](const geomex::ModelHypersurface& m) {
    for (const auto& c : m.curvatures) width = std::max(width, c.value.width());
    for (const auto& p : m.power_sums) width = std::max(width, p.width());
  };
  bool ok = true;
  const auto sphere = geomex::equatorial_sphere();
  widest(sphere);
  ok = ok && sphere.S == QuadNumber(Rational(0));
  for (int k = 1; k <= 3; ++k) {
    const auto m = geomex::clifford_torus(k);
    widest(m);
    ok = ok && m.S == QuadNumber(Rational(4)) && m.okumura_equality() == (k != 2);
  }
  const auto g4 = geomex::isoparametric_g4();
  widest(g4);
  const long want[] = {0, 12, 0, 68};
  for (int i = 0; i < 4; ++i) ok = ok && g4.power_sums[i].value == QuadNumber(Rational(want[i]));
  return {ok && width <= 1e-12, "max enclosure width " + fmt("%.2e", width)};
}

Outcome analytic_suites() {
  const mollify::Mollifier moll(0.05);
  bool ok = true;
  std::string failed;
  auto take = [&](const std::vector<mollify::PropertyCheck>& cs) {
    for (const auto& c : cs)
      if (!c.pass) ok = false, failed += " " + c.name;
  };
  take(mollify::check_mollifier(moll, 10000));
  double residual = 0.0;
  for (int k = 0; k <= 10000; ++k) {
    const double t = 0.05 + 2.0 * k / 10000.0;
    residual = std::max({residual, std::abs(moll.h(t) - t), std::abs(moll.h(-t) - t)});
  }
  ok = ok && residual <= 1e-12;
  take(mollify::check_K(0.1, 0.05, 100000, 20240229));
  const mollify::Cutoff cut(0.1);
  take(mollify::check_cutoff(cut, 10000));
  ok = ok && cut.slope_constant() <= 4.0;
  return {ok, "|h - |t|| <= " + fmt("%.1e", residual) + " outside the band, c = " + fmt("%.6f", cut.slope_constant()) +
                  (failed.empty() ? "" : ", failed:" + failed)};
}

Outcome discrepancy() {
  const auto r = geomex::check_model(geomex::clifford_torus(1), 2);
  bool clause = false;
  for (const auto& c : r.clauses)
    if (c.name == "A3_eq_0" && c.status == geomex::ClauseStatus::Violated) clause = true;
  const fs::path dir = fs::temp_directory_path() / "isocert_acceptance_examples";
  std::ostringstream out, err;
  const int code = cli::run({"--out", dir.string(), "examples", "--check", "clifford-torus-1", "--theorem", "2"}, out, err);
  return {r.verdict == geomex::ModelVerdict::DocumentedDiscrepancy && clause &&
              r.cross_reference.find("open question") != std::string::npos && code == cli::kExitDocumentedDiscrepancy,
          "verdict " + geomex::to_string(r.verdict) + ", exit code " + std::to_string(code)};
}

std::vector<std::vector<std::string>> full_suite() {
  return {{"verify-identities", "--which", "all", "--mode", "both"},
          {"solve", "--system", "all", "--S", "8", "--A3", "1"},
          {"solve", "--system", "I", "--S", "12", "--A3", "0"},
          {"certify", "li", "--S", "8", "--tau", "0.05", "--margin", "1e-9"},
          {"certify", "okumura", "--n", "4", "--tol", "1e-6"},
          {"certify", "band", "--S", "8", "--A3", "1", "--quantity", "all"},
          {"mollifier", "--delta", "0.05"},
          {"cutoff", "--eps", "0.1"},
          {"examples", "--check", "all"},
          {"pipeline", "--S", "8", "--A3", "1", "--eps0", "0.1", "--delta1", "0.05"}};
}

// Runs every command of the suite, each into its own subdirectory of root.
void run_suite(const fs::path& root, const std::string& threads) {
  fs::remove_all(root);
  int k = 0;
  for (auto args : full_suite()) {
    const fs::path dir = root / std::to_string(k++);
    args.insert(args.begin(), {"--out", dir.string(), "--threads", threads, "--format", "json"});
    std::ostringstream out, err;
    cli::run(args, out, err);
    std::ofstream(dir / "stdout.txt") << out.str();
  }
}

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / "isocert_acceptance_determinism";
  run_suite(base / "a", "1");
  run_suite(base / "b", "2");
  std::size_t files = 0, differ = 0;
  for (const auto& e : fs::recursive_directory_iterator(base / "a")) {
    if (!e.is_regular_file()) continue;
    const fs::path other = base / "b" / fs::relative(e.path(), base / "a");
    auto read = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    ++files;
    if (!fs::exists(other) || read(e.path()) != read(other)) ++differ;
  }
  return {files > 10 && differ == 0, std::to_string(files) + " files compared, " + std::to_string(differ) + " differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity suite", identities},
      {"L_i at (-3,-1,1,3)", li_at_spectrum},
      {"L_i negativity certificate", li_certificate},
      {"Okumura certificate", okumura},
      {"evenly spaced configuration", evenly_spaced},
      {"lam3 = lam4 branch identities", branch},
      {"model landmarks", landmarks},
      {"mollifier, K and cutoff suites", analytic_suites},
      {"theorem-2 discrepancy report", discrepancy},
      {"determinism", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [title, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  criterion %d  %s: %s\n", o.pass ? "PASS" : "FAIL", ++n, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
