// Compares the serial reference kernels against the OpenMP ones on an
// MNIST-shaped workload.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "stdpnet/attack.hpp"
#include "stdpnet/batch.hpp"

using namespace stdpnet;

namespace {

struct Fixture {
    Network net = init_network({784, 32, 16, 1}, 1);
    AssociativityMap assoc = assign_associativity({784, 32, 16, 1}, 2);
    RuleParams params;
    Dataset ds;
    std::vector<std::size_t> indices;

    explicit Fixture(std::size_t count) {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        ds.count = count;
        ds.dim = 784;
        ds.features.resize(count * 784);
        for (double& v : ds.features) v = dist(rng);
        for (std::size_t i = 0; i < count; ++i) ds.labels.push_back(int(rng() & 1u));
        indices.resize(count);
        std::iota(indices.begin(), indices.end(), std::size_t{0});
    }
};

const Fixture& fixture() {
    static Fixture f(512);
    return f;
}

void BM_StdpDirections(benchmark::State& state, ExecPolicy policy) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        auto dirs = batch_directions(UpdateSource::StdpRule, f.net, f.ds, f.indices,
                                     f.assoc, f.params, policy);
        benchmark::DoNotOptimize(dirs);
    }
}

void BM_GradientDirections(benchmark::State& state, ExecPolicy policy) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        auto dirs = batch_directions(UpdateSource::Gradient, f.net, f.ds, f.indices,
                                     f.assoc, f.params, policy);
        benchmark::DoNotOptimize(dirs);
    }
}

void BM_Evaluate(benchmark::State& state, ExecPolicy policy) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        EvalResult r = evaluate(f.net, f.ds, policy);
        benchmark::DoNotOptimize(r);
    }
}

void BM_AdversarialAccuracy(benchmark::State& state, ExecPolicy policy) {
    const Fixture& f = fixture();
    AttackConfig config;
    for (auto _ : state) {
        auto acc = adversarial_accuracy(f.net, f.ds, config, policy);
        benchmark::DoNotOptimize(acc);
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_StdpDirections, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StdpDirections, openmp, ExecPolicy::OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GradientDirections, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GradientDirections, openmp, ExecPolicy::OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Evaluate, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Evaluate, openmp, ExecPolicy::OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AdversarialAccuracy, serial, ExecPolicy::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AdversarialAccuracy, openmp, ExecPolicy::OpenMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
