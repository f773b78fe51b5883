#include <benchmark/benchmark.h>

#include <random>

#include "qmaze/quantum/sampler_qnn.hpp"
#include "qmaze/quantum/state_vector.hpp"

using namespace qmaze::quantum;

static void BM_ApplyHadamard(benchmark::State& state) {
    StateVector s = StateVector::zero_state(2);
    const Gate g = Gate::h(0);
    for (auto _ : state) {
        apply_gate_in_place(s, g);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(BM_ApplyHadamard);

static void BM_ApplyCx(benchmark::State& state) {
    StateVector s = StateVector::zero_state(2);
    apply_gate_in_place(s, Gate::h(0));
    const Gate g = Gate::cx(0, 1);
    for (auto _ : state) {
        apply_gate_in_place(s, g);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(BM_ApplyCx);

static void BM_QnnForward(benchmark::State& state) {
    const auto qnn = SamplerQnn::make_default();
    const std::vector<double> x{0.3, -0.8};
    const std::vector<double> w{0.1, 0.5, -0.4, 1.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn.forward(x, w));
    }
}
BENCHMARK(BM_QnnForward);

static void BM_ParameterShiftJacobians(benchmark::State& state) {
    const auto qnn = SamplerQnn::make_default();
    const std::vector<double> x{0.3, -0.8};
    const std::vector<double> w{0.1, 0.5, -0.4, 1.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn.parameter_shift_jacobians(x, w));
    }
}
BENCHMARK(BM_ParameterShiftJacobians);

static void BM_SampleCounts(benchmark::State& state) {
    const auto qnn = SamplerQnn::make_default();
    const std::vector<double> x{0.3, -0.8};
    const std::vector<double> w{0.1, 0.5, -0.4, 1.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnn.sample_counts(x, w, state.range(0), 42));
    }
}
BENCHMARK(BM_SampleCounts)->Arg(1024)->Arg(8192);
