#include <benchmark/benchmark.h>

#include "thsplines/approx.hpp"
#include "thsplines/basis.hpp"

namespace {

using namespace thsplines;

struct Setup {
    BasisSpec spec;
    WeightSet weights;
    std::vector<double> x;

    explicit Setup(int order) : spec(Family::Trigonometric, order, make_fit_knots(order, 32)), x(fit_grid(10001)) {
        weights = compute_weights(spec);
    }
};

template <bool Parallel>
void BM_Collocation(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto c = Parallel ? assemble_collocation(s.spec, s.weights, s.x) : assemble_collocation_serial(s.spec, s.weights, s.x);
        benchmark::DoNotOptimize(c.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.x.size()));
}

template <bool Parallel>
void BM_Tabulate(benchmark::State& state) {
    const Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto t = Parallel ? tabulate_basis(s.spec, s.weights, s.x) : tabulate_basis_serial(s.spec, s.weights, s.x);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.x.size()));
}

}  // namespace

BENCHMARK(BM_Collocation<false>)->Name("collocation/serial")->Arg(3)->Arg(7)->Arg(11);
BENCHMARK(BM_Collocation<true>)->Name("collocation/openmp")->Arg(3)->Arg(7)->Arg(11);
BENCHMARK(BM_Tabulate<false>)->Name("tabulate/serial")->Arg(3)->Arg(7);
BENCHMARK(BM_Tabulate<true>)->Name("tabulate/openmp")->Arg(3)->Arg(7);

BENCHMARK_MAIN();
