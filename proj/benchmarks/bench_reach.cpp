#include <benchmark/benchmark.h>

#include "preach/abstraction/graph.hpp"
#include "preach/reach/decide.hpp"
#include "preach/reach/search.hpp"

using preach::RatBox;
using preach::RatPoint;
using preach::Rational;
using preach::pam::AffinePiece;
using preach::pam::Matrix;
using preach::pam::PamSystem;

namespace {

// Two contracting basins on [0,1]^2: each half of the x axis folds into itself.
PamSystem basins2d() {
    const Rational h(1, 2);
    const auto a = Matrix::diagonal({h, h});
    return PamSystem(RatBox(RatPoint{0, 0}, RatPoint{1, 1}),
                     {{RatBox(RatPoint{0, 0}, RatPoint{h, 1}), a, RatPoint{0, Rational(1, 4)}},
                      {RatBox(RatPoint{h, 0}, RatPoint{1, 1}), a, RatPoint{h, Rational(1, 4)}}});
}

PamSystem basins1d() {
    const Rational h(1, 2);
    const auto a = Matrix::diagonal({h});
    return PamSystem(RatBox(RatPoint{0}, RatPoint{1}),
                     {{RatBox(RatPoint{0}, RatPoint{h}), a, RatPoint{0}}, {RatBox(RatPoint{h}, RatPoint{1}), a, RatPoint{h}}});
}

void BM_Successors(benchmark::State& state) {
    const auto sys = basins2d();
    const preach::abstraction::AbstractionGraph g(sys, static_cast<int>(state.range(0)));
    preach::abstraction::FlatCell v = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.successors(v));
        v = (v + 7919) % g.grid().cellCount();
    }
}
BENCHMARK(BM_Successors)->DenseRange(2, 8, 2);

void BM_GraphReachBFS(benchmark::State& state) {
    const auto sys = basins2d();
    const preach::abstraction::AbstractionGraph g(sys, static_cast<int>(state.range(0)));
    const auto src = g.grid().cellsContaining(RatPoint{1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::reach::graphReachBFS(g, src));
    }
}
BENCHMARK(BM_GraphReachBFS)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_PathSavitch(benchmark::State& state) {
    const auto sys = basins1d();
    const preach::abstraction::AbstractionGraph g(sys, static_cast<int>(state.range(0)));
    const auto last = g.grid().cellCount() - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::reach::pathSavitch(g, last, 0));
    }
}
BENCHMARK(BM_PathSavitch)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

void BM_DecideOmegaReach(benchmark::State& state) {
    const auto sys = basins2d();
    const preach::reach::Target y{RatPoint{0, Rational(1, 2)}, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::reach::decideOmegaReach(sys, RatPoint{1, 1}, y, 8, 256));
    }
}
BENCHMARK(BM_DecideOmegaReach)->Unit(benchmark::kMillisecond);

void BM_CheckWitness(benchmark::State& state) {
    const auto sys = basins2d();
    const preach::abstraction::AbstractionGraph g(sys, static_cast<int>(state.range(0)));
    const auto w = preach::reach::extractWitness(g, RatPoint{1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::reach::checkWitness(sys, w, RatPoint{1, 1}, RatPoint{0, 0}, 3));
    }
}
BENCHMARK(BM_CheckWitness)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace
