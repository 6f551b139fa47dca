#include <benchmark/benchmark.h>

#include "mseq/core.hpp"
#include "mseq/decompose.hpp"
#include "mseq/stream.hpp"
#include "mseq/twinning.hpp"
#include "mseq/weakdet.hpp"

namespace {

using namespace mseq;

void BM_CheckTp(benchmark::State& state, const char* name) {
  const Transducer& t = fixture(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_tp(t));
  }
}

void BM_CheckWtp(benchmark::State& state, const char* name) {
  const Transducer& t = fixture(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_wtp(t));
  }
}

void BM_WeakDeterminize(benchmark::State& state, const char* name) {
  const Transducer& t = fixture(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_determinize(t));
  }
}

void BM_Decompose(benchmark::State& state, const char* name) {
  const Transducer& t = fixture(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(t));
  }
}

void BM_Evaluate(benchmark::State& state, const char* name, Word input) {
  const Transducer& t = fixture(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(t, input));
  }
}

void BM_Stream(benchmark::State& state, const char* name, Word input) {
  Decomposition d = decompose(fixture(name));
  for (auto _ : state) {
    StreamSession s(d, advisory_bits(d, input));
    for (char c : input) s.push(c);
    benchmark::DoNotOptimize(s.close());
  }
}

BENCHMARK_CAPTURE(BM_CheckTp, t_fig2, "t_fig2");
BENCHMARK_CAPTURE(BM_CheckTp, t1_appendix, "t1_appendix");
BENCHMARK_CAPTURE(BM_CheckWtp, t_fig2, "t_fig2");
BENCHMARK_CAPTURE(BM_CheckWtp, t_swap_star, "t_swap_star");
BENCHMARK_CAPTURE(BM_CheckWtp, t2_appendix, "t2_appendix");
BENCHMARK_CAPTURE(BM_WeakDeterminize, t_fig2, "t_fig2");
BENCHMARK_CAPTURE(BM_WeakDeterminize, t1_appendix, "t1_appendix");
BENCHMARK_CAPTURE(BM_WeakDeterminize, t_swap_star, "t_swap_star");
BENCHMARK_CAPTURE(BM_Decompose, t_fig2, "t_fig2");
BENCHMARK_CAPTURE(BM_Decompose, t2_appendix, "t2_appendix");
BENCHMARK_CAPTURE(BM_Evaluate, t_fig2_a40, "t_fig2", Word(40, 'a'));
BENCHMARK_CAPTURE(BM_Stream, t_fig2_a40, "t_fig2", Word(40, 'a'));
BENCHMARK_CAPTURE(BM_Stream, t_fig2_a400, "t_fig2", Word(400, 'a'));

}  // namespace

BENCHMARK_MAIN();
