// Copyright 2026 The Dirloud Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dirloud/analysis.h"
#include "dirloud/peripheral.h"
#include "dirloud/synth.h"

namespace {

using namespace dirloud;

StereoBuffer bench_signal(double seconds) {
  return panned_source(MonoSource::white_noise(99, 0.5), PanLaw{0.9, 0.45}, seconds, 48000);
}

void BM_StftAnalyze(benchmark::State& state) {
  const StereoBuffer buf = bench_signal(5.0);
  const StftConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft_analyze(buf, cfg));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(buf.frames()));
}
BENCHMARK(BM_StftAnalyze);

void BM_PeripheralAnalyze(benchmark::State& state) {
  const StereoBuffer buf = bench_signal(5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(peripheral_analyze(buf, StftConfig{}, 20, 0.0));
  }
}
BENCHMARK(BM_PeripheralAnalyze);

void BM_PanningIndex(benchmark::State& state) {
  const BandedSpectrogram spec = peripheral_analyze(bench_signal(5.0), StftConfig{}, 20, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(panning_index(spec));
  }
}
BENCHMARK(BM_PanningIndex);

void BM_LoudnessMap(benchmark::State& state) {
  const BandedSpectrogram spec = peripheral_analyze(bench_signal(5.0), StftConfig{}, 20, 0.0);
  const PanningIndexField field = panning_index(spec);
  const DirectionBank bank = DirectionBank::equally_spaced(22, 0.006);
  const std::vector<int> subset{7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(loudness_map(spec, field, bank, subset, jobs));
  }
}
BENCHMARK(BM_LoudnessMap)->Arg(1)->Arg(4);

void BM_CompareFull(benchmark::State& state) {
  const StereoBuffer ref = bench_signal(5.0);
  const StereoBuffer sut = pan_collapse(ref, 1.0, 2.0, 3.0);
  const AnalysisConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_buffers(ref, sut, cfg));
  }
}
BENCHMARK(BM_CompareFull);

}  // namespace

BENCHMARK_MAIN();
