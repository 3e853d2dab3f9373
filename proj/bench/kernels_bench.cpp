// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// thread counts; results must be identical either way, only time differs.

#include <benchmark/benchmark.h>

#include "opmode/common/rng.hpp"
#include "opmode/kinematics.hpp"
#include "opmode/mnn.hpp"

namespace {

using namespace opmode;

std::vector<kinematics::TrajectoryPoint> trace(std::size_t vehicles, int seconds) {
  Rng rng(1);
  std::vector<kinematics::TrajectoryPoint> pts;
  pts.reserve(vehicles * static_cast<std::size_t>(seconds));
  for (std::size_t veh = 0; veh < vehicles; ++veh) {
    double v = rng.uniform(0.0, 40.0);
    for (int t = 0; t < seconds; ++t) {
      const double next = std::max(0.0, v + rng.uniform(-3.0, 3.0));
      pts.push_back({static_cast<std::int64_t>(veh), t, "L" + std::to_string(veh % 50), next, next - v});
      v = next;
    }
  }
  return pts;
}

struct NetFixture {
  mnn::Model model = mnn::init(17, 3);
  mnn::Matrix x;
  std::vector<kinematics::OpModeDistribution> y;
  std::vector<std::size_t> rows;

  explicit NetFixture(std::size_t n) {
    Rng rng(4);
    x = {n, 17, {}};
    for (std::size_t i = 0; i < n * 17; ++i) x.data.push_back(rng.uniform(-2.0, 2.0));
    for (std::size_t i = 0; i < n; ++i) {
      kinematics::OpModeDistribution d;
      d.fractions[i % kinematics::kNumBins] = 1.0;
      y.push_back(d);
      rows.push_back(i);
    }
  }
};

void BM_ClassifyPointsSerial(benchmark::State& state) {
  const auto pts = trace(static_cast<std::size_t>(state.range(0)), 600);
  for (auto _ : state) benchmark::DoNotOptimize(kinematics::serial::classify_points(pts, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}

void BM_ClassifyPointsParallel(benchmark::State& state) {
  const auto pts = trace(static_cast<std::size_t>(state.range(0)), 600);
  for (auto _ : state) benchmark::DoNotOptimize(kinematics::classify_points(pts, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}

void BM_BatchGradientSerial(benchmark::State& state) {
  NetFixture f(static_cast<std::size_t>(state.range(0)));
  std::vector<double> grad;
  for (auto _ : state) benchmark::DoNotOptimize(mnn::serial::batch_gradient(f.model, f.x, f.y, f.rows, grad));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchGradientParallel(benchmark::State& state) {
  NetFixture f(static_cast<std::size_t>(state.range(0)));
  std::vector<double> grad;
  for (auto _ : state) benchmark::DoNotOptimize(mnn::batch_gradient(f.model, f.x, f.y, f.rows, grad));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PredictSerial(benchmark::State& state) {
  NetFixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mnn::serial::predict_batch(f.model, f.x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PredictParallel(benchmark::State& state) {
  NetFixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mnn::predict_batch(f.model, f.x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ClassifyPointsSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyPointsParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchGradientSerial)->Arg(32)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BatchGradientParallel)->Arg(32)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PredictSerial)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PredictParallel)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
