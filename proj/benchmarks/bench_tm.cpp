#include <benchmark/benchmark.h>

#include "preach/embed/emulation.hpp"
#include "preach/embed/encoding.hpp"
#include "preach/io/tm_file.hpp"
#include "preach/pam/pam.hpp"
#include "preach/tm/perturbed.hpp"

namespace {

const char* kPalindrome = R"(states: start have0 have1 check0 check1 back accept reject
alphabet: 0 1
blank: _
initial: start
accept: accept
reject: reject
start _ -> accept _ S
start 0 -> have0 _ R
start 1 -> have1 _ R
have0 0 -> have0 0 R
have0 1 -> have0 1 R
have0 _ -> check0 _ L
have1 0 -> have1 0 R
have1 1 -> have1 1 R
have1 _ -> check1 _ L
check0 0 -> back _ L
check0 1 -> reject 1 S
check0 _ -> accept _ S
check1 1 -> back _ L
check1 0 -> reject 0 S
check1 _ -> accept _ S
back 0 -> back 0 L
back 1 -> back 1 L
back _ -> start _ R
)";

preach::tm::TuringMachine palindrome() { return preach::io::parseTmText(kPalindrome); }

std::string word(std::int64_t len) {
    std::string w(static_cast<std::size_t>(len), '0');
    for (std::size_t i = 0; i < w.size() / 2; ++i) w[i] = w[w.size() - 1 - i] = (i % 3 == 0) ? '1' : '0';
    return w;
}

void BM_BuildPam(benchmark::State& state) {
    const auto m = palindrome();
    const auto scheme = preach::embed::EncodingScheme::forMachine(m, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::embed::buildPam(m, scheme));
    }
}
BENCHMARK(BM_BuildPam)->Arg(5)->Arg(9)->Arg(17);

void BM_EmulatedRun(benchmark::State& state) {
    const auto m = palindrome();
    const auto scheme = preach::embed::EncodingScheme::forMachine(m);
    const auto sys = preach::embed::buildPam(m, scheme);
    const auto w = m.word(word(state.range(0)));
    const auto steps = preach::tm::tmRun(m, w, 1 << 20).steps;
    for (auto _ : state) {
        auto x = preach::embed::encodeConfig(scheme, preach::tm::initialConfig(m, w));
        for (std::size_t t = 0; t < steps; ++t) x = preach::pam::evalPam(sys, x);
        benchmark::DoNotOptimize(x);
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_EmulatedRun)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_SpacePerturbed(benchmark::State& state) {
    const auto m = palindrome();
    const auto w = m.word(word(6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::tm::searchSpacePerturbed(m, w, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SpacePerturbed)->DenseRange(1, 8, 1)->Unit(benchmark::kMillisecond);

void BM_TmRun(benchmark::State& state) {
    const auto m = palindrome();
    const auto w = m.word(word(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(preach::tm::tmRun(m, w, 1 << 22));
    }
}
BENCHMARK(BM_TmRun)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
