// Serial reference kernels against their OpenMP counterparts.

#include "dengfan/kernels.hpp"
#include "dengfan/reference_table.hpp"

#include <benchmark/benchmark.h>

using namespace dengfan;

namespace {

std::vector<LevelRequest> all_states() {
    std::vector<LevelRequest> req;
    for (const auto& ref : reference_table()) req.push_back({ref.molecule, ref.n, ref.l});
    return req;
}

template <auto Kernel>
void levels_with_oracle(benchmark::State& state) {
    const auto req = all_states();
    TabulateOptions opt;
    opt.oracle = true;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(req, default_molecules(), opt));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(req.size()));
}

template <auto Kernel>
void curves(benchmark::State& state) {
    const auto& h2 = default_molecules()[0];
    const std::vector<int> ls = {0, 5, 10};
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(h2, 0.2, 5.0, points, ls, PhysicalConstants{}));
    state.SetItemsProcessed(state.iterations() * points);
}

template <auto Kernel>
void wavefunction(benchmark::State& state) {
    const auto& co = default_molecules()[2];
    std::vector<double> r(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = 0.5 + 2.0 * static_cast<double>(i) / r.size();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(co, 7, 10, r, PhysicalConstants{}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(levels_with_oracle<tabulate_levels_serial>)->Name("levels_oracle/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(levels_with_oracle<tabulate_levels_parallel>)->Name("levels_oracle/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(curves<sample_curves_serial>)->Name("curves/serial")->Arg(100000);
BENCHMARK(curves<sample_curves_parallel>)->Name("curves/parallel")->Arg(100000)->UseRealTime();
BENCHMARK(wavefunction<sample_wavefunction_serial>)->Name("wavefunction/serial")->Arg(100000);
BENCHMARK(wavefunction<sample_wavefunction_parallel>)->Name("wavefunction/parallel")->Arg(100000)->UseRealTime();

BENCHMARK_MAIN();
