#include <benchmark/benchmark.h>

#include "curvball/catalog.hpp"
#include "curvball/fishbowl.hpp"
#include "curvball/mesh.hpp"
#include "curvball/sampling.hpp"
#include "curvball/verifier.hpp"

namespace {

using namespace curvball;

void BM_CurvatureSample(benchmark::State& state) {
  const Surface torus = makeTorus(2.0, 1.0);
  const SurfacePatch& patch = torus.patch(0);
  const ParamPoint p = patch.domain().center();
  const auto mode = state.range(0) ? DerivativeMode::kFiniteDifference : DerivativeMode::kAnalytic;
  for (auto _ : state) benchmark::DoNotOptimize(curvatureSample(patch, p, mode));
}
BENCHMARK(BM_CurvatureSample)->Arg(0)->Arg(1);

void BM_MaxCurvatureSphere(benchmark::State& state) {
  const Surface s = makePerturbedSphere(RadialPerturbation::cos3Theta(), 0.05);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maxAbsNormalCurvature(s, grid).value);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(gridPointCount(s, grid)));
}
BENCHMARK(BM_MaxCurvatureSphere)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Tessellate(benchmark::State& state) {
  const Surface s = makeSphere({}, 1.0);
  const int density = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tessellate(s, density).triangles().size());
}
BENCHMARK(BM_Tessellate)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EnclosedVolume(benchmark::State& state) {
  const TriMesh mesh = tessellate(makeTorus(2.0, 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enclosedVolume(mesh));
}
BENCHMARK(BM_EnclosedVolume)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_ContainsPoint(benchmark::State& state) {
  const TriMesh mesh = tessellate(makeSphere({}, 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(containsPoint(mesh, {0.1, 0.2, 0.3}));
}
BENCHMARK(BM_ContainsPoint)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_MinDistanceToMesh(benchmark::State& state) {
  const TriMesh mesh = tessellate(makeSphere({}, 1.0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minDistanceToMesh(mesh, {0.1, 0.2, 0.3}).distance);
}
BENCHMARK(BM_MinDistanceToMesh)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_VerifyTheorem(benchmark::State& state) {
  const Surface s = makeSphere({0.4, 0.0, 0.0}, 1.5);
  VerifierOptions o;
  o.grid = static_cast<int>(state.range(0));
  o.meshDensity = 64;
  for (auto _ : state) benchmark::DoNotOptimize(verifyTheorem(s, o).conclusion.value);
}
BENCHMARK(BM_VerifyTheorem)->Arg(32)->Arg(105)->Unit(benchmark::kMillisecond);

void BM_BuildFishbowl(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tessellate(buildFishbowl(), 32).triangles().size());
}
BENCHMARK(BM_BuildFishbowl)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
