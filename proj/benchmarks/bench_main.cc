// Timing of the simulation engines and the minimizers on Tabakov-Vardi
// automata over {a, b} with acceptance density 0.5.
#include <benchmark/benchmark.h>

#include "bamin/inclusion.hh"
#include "bamin/minimize.hh"
#include "bamin/randgen.hh"
#include "bamin/simulation.hh"

namespace {

using namespace bamin;

Automaton sample(std::size_t n, double td, std::uint64_t seed = 1) {
    return tabakov_vardi(RandomSpec{n, 2, td, 0.5, seed});
}

void BM_OrdinarySim(benchmark::State& st, SimVariant v) {
    Automaton a = remove_dead(sample(std::size_t(st.range(0)), 1.8));
    for (auto _ : st) benchmark::DoNotOptimize(ordinary_sim(a, v));
    st.counters["states"] = double(a.num_states());
}
BENCHMARK_CAPTURE(BM_OrdinarySim, di, SimVariant::di())->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_OrdinarySim, de, SimVariant::de())->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_OrdinarySim, bw, SimVariant::bw())->Arg(100)->Arg(400);

/// Arguments: states, lookahead.
void BM_LookaheadSim(benchmark::State& st, SimVariant v) {
    Automaton a = remove_dead(sample(std::size_t(st.range(0)), 1.8));
    SimStats stats;
    for (auto _ : st) benchmark::DoNotOptimize(lookahead_sim(a, v, unsigned(st.range(1)), &stats));
    st.counters["evaluations"] = benchmark::Counter(double(stats.evaluations), benchmark::Counter::kAvgIterations);
}
BENCHMARK_CAPTURE(BM_LookaheadSim, di, SimVariant::di())->ArgsProduct({{100, 200}, {1, 4, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LookaheadSim, bw, SimVariant::bw())->ArgsProduct({{100, 200}, {1, 4, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LookaheadSim, de, SimVariant::de())->ArgsProduct({{100}, {1, 4, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LookaheadSim, f, SimVariant::f())->ArgsProduct({{100}, {1, 4, 12}})->Unit(benchmark::kMillisecond);

/// Arguments: states, density ×10.
void BM_Heavy12(benchmark::State& st) {
    Automaton a = sample(std::size_t(st.range(0)), double(st.range(1)) / 10);
    MinimizeConfig cfg;
    std::size_t out = 0;
    for (auto _ : st) out = heavy(a, cfg).num_states();
    st.counters["output_states"] = double(out);
}
BENCHMARK(BM_Heavy12)->ArgsProduct({{50, 100, 200}, {14, 18, 20}})->Unit(benchmark::kMillisecond);

void BM_Light12(benchmark::State& st) {
    Automaton a = sample(std::size_t(st.range(0)), 1.8);
    MinimizeConfig cfg;
    cfg.method = Method::light;
    for (auto _ : st) benchmark::DoNotOptimize(light(a, cfg));
}
BENCHMARK(BM_Light12)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Inclusion(benchmark::State& st) {
    const std::size_t n = std::size_t(st.range(0));
    Automaton a = sample(n, 2.0, 11), b = sample(n, 2.0, 12);
    InclusionConfig cfg;
    cfg.max_u = cfg.max_v = 8;
    for (auto _ : st) benchmark::DoNotOptimize(check_inclusion(a, b, cfg));
}
BENCHMARK(BM_Inclusion)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged libbenchmark_main.a carries LTO bytecode from another
// compiler release, so main comes from here.
BENCHMARK_MAIN();
