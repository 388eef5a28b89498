#include <benchmark/benchmark.h>

#include <cmath>

#include "isocert/certify/certify.hpp"
#include "isocert/configsolve/configsolve.hpp"
#include "isocert/exactalg/ratfn.hpp"
#include "isocert/frameforms/identities.hpp"
#include "isocert/geomex/geomex.hpp"
#include "isocert/mollify/mollify.hpp"

using namespace isocert;
using exactalg::Rational;

static void BM_IdentitySuite(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? frameforms::CurvatureMode::Symbolic : frameforms::CurvatureMode::Expanded;
  for (auto _ : state) benchmark::DoNotOptimize(frameforms::verify_all(mode));
}
BENCHMARK(BM_IdentitySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SingleIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frameforms::verify_identity("dPhi"));
}
BENCHMARK(BM_SingleIdentity)->Unit(benchmark::kMillisecond);

static void BM_RatFnGcd(benchmark::State& state) {
  const auto t = exactalg::SymbolTable::make({"a", "b", "c"});
  const auto a = exactalg::MultiPoly::variable(t, 0), b = exactalg::MultiPoly::variable(t, 1),
             c = exactalg::MultiPoly::variable(t, 2);
  const auto g = (a - b).pow(3) * (b - c).pow(2);
  const auto num = g * (a + c).pow(4), den = g * (a * b - c).pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(exactalg::RatFn::reduce(num, den));
}
BENCHMARK(BM_RatFnGcd)->Unit(benchmark::kMicrosecond);

static void BM_LiCertificate(benchmark::State& state) {
  const double S = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify::certify_Li_negative(S, 0.05 * std::sqrt(S), 1e-9, 20));
}
BENCHMARK(BM_LiCertificate)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OkumuraCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify::certify_okumura(4, 1e-6, 1e-3));
}
BENCHMARK(BM_OkumuraCertificate)->Unit(benchmark::kMillisecond);

static void BM_BandCertificate(benchmark::State& state) {
  certify::BandOptions o;
  o.a3 = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(certify::certify_band_bounds("G1g", 8.0, 0.1, 0.05, o));
}
BENCHMARK(BM_BandCertificate)->Unit(benchmark::kMillisecond);

static void BM_MollifierEval(benchmark::State& state) {
  const mollify::Mollifier m(0.05);
  double t = -0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.h(t));
    benchmark::DoNotOptimize(m.dh(t));
    t = t > 0.1 ? -0.1 : t + 1e-4;
  }
}
BENCHMARK(BM_MollifierEval);

static void BM_MollifierBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mollify::Mollifier(0.05).h(0.0));
}
BENCHMARK(BM_MollifierBuild)->Unit(benchmark::kMicrosecond);

static void BM_SolveSystems(benchmark::State& state) {
  const configsolve::ScalarParams p{Rational(8), configsolve::Surd{Rational(1)}};
  for (auto _ : state) {
    for (auto tag : {configsolve::SystemTag::I, configsolve::SystemTag::II, configsolve::SystemTag::III})
      benchmark::DoNotOptimize(configsolve::solve_system(tag, p));
  }
}
BENCHMARK(BM_SolveSystems)->Unit(benchmark::kMillisecond);

static void BM_ModelChecks(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& name : geomex::model_names())
      for (int th = 1; th <= 3; ++th) benchmark::DoNotOptimize(geomex::check_model(geomex::model_by_name(name), th));
  }
}
BENCHMARK(BM_ModelChecks)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
