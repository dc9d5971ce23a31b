#include <benchmark/benchmark.h>

#include <array>
#include <random>
#include <vector>

#include "neofuzzy/pipeline.hpp"

using namespace neofuzzy;

namespace {

NfnModel trained_model() {
  static const NfnModel model = [] {
    const Dataset data = gen_grid(15, -10.0, 10.0);
    return run_pipeline(PipelineConfig{}, data).model;
  }();
  return model;
}

std::vector<std::array<double, 2>> random_points(std::size_t n) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  std::vector<std::array<double, 2>> points(n);
  for (auto& p : points) p = {pick(rng), pick(rng)};
  return points;
}

}  // namespace

static void BM_TriangleEval(benchmark::State& state) {
  const FuzzyPartition p = FuzzyPartition::uniform(-10.0, 10.0);
  const TriangularMf& mf = p.curve(FuzzyLabel::ZE);
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf.evaluate(x));
    x = x < 3.0 ? x + 0.1 : -3.0;
  }
}
BENCHMARK(BM_TriangleEval);

static void BM_ActivePair(benchmark::State& state) {
  const FuzzyPartition p = FuzzyPartition::uniform(-10.0, 10.0);
  const auto points = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.active_pair(points[i & 1023][0]));
    ++i;
  }
}
BENCHMARK(BM_ActivePair);

static void BM_NfnEval(benchmark::State& state) {
  const NfnModel model = trained_model();
  const auto points = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfn_eval(model, points[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_NfnEval);

static void BM_MlpForward(benchmark::State& state) {
  const MlpModel model = mlp_init(0);
  const auto points = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = points[i & 1023];
    benchmark::DoNotOptimize(mlp_forward(model, p[0], p[1]));
    ++i;
  }
}
BENCHMARK(BM_MlpForward);

static void BM_TrainEpoch(benchmark::State& state) {
  const Dataset data = gen_grid(15, -10.0, 10.0);
  NfnModel model = NfnModel::zeros({FuzzyPartition::uniform(-10.0, 10.0),
                                    FuzzyPartition::uniform(-10.0, 10.0)});
  TrainConfig cfg;
  cfg.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_weights(model, data, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(BM_TrainEpoch);

static void BM_SomTrain(benchmark::State& state) {
  const Dataset data = gen_grid(15, -10.0, 10.0);
  std::vector<double> xs;
  xs.reserve(data.size());
  for (const Sample& s : data) xs.push_back(s.x1);
  const SomState init = som_init(-10.0, 10.0);
  SomSchedule sched;
  sched.epochs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(som_train(init, xs, sched, 0));
  }
}
BENCHMARK(BM_SomTrain)->Arg(10)->Arg(50);

static void BM_FullPipeline(benchmark::State& state) {
  const Dataset data = gen_grid(15, -10.0, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(PipelineConfig{}, data));
  }
}
BENCHMARK(BM_FullPipeline);

BENCHMARK_MAIN();
