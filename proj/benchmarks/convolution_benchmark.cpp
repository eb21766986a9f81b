#include <benchmark/benchmark.h>

#include "holosem/binding.hpp"
#include "holosem/convolution.hpp"
#include "holosem/rng.hpp"

namespace {

using holosem::circ_conv_fft;
using holosem::circ_conv_naive;
using holosem::circ_corr;
using holosem::HyperVector;
using holosem::random_unit;
using holosem::Rng;

void ConvNaive(benchmark::State& state) {
  Rng rng(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const HyperVector a = random_unit(dim, rng);
  const HyperVector b = random_unit(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circ_conv_naive(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvNaive)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void ConvFft(benchmark::State& state) {
  Rng rng(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const HyperVector a = random_unit(dim, rng);
  const HyperVector b = random_unit(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circ_conv_fft(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvFft)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void UnbindRoundTrip(benchmark::State& state) {
  Rng rng(11);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const HyperVector a = random_unit(dim, rng);
  const HyperVector b = random_unit(dim, rng);
  const HyperVector trace = holosem::circ_conv(a, b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circ_corr(trace, b));
  }
}
BENCHMARK(UnbindRoundTrip)->Arg(512)->Arg(2048)->Arg(8192);

void EncodeTensor(benchmark::State& state) {
  Rng rng(13);
  const auto dim = static_cast<std::size_t>(state.range(0));
  holosem::RoleFillerStructure structure;
  for (int i = 0; i < 4; ++i) {
    structure.pairs.push_back({random_unit(dim, rng), random_unit(dim, rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(holosem::encode_tensor(structure));
  }
}
BENCHMARK(EncodeTensor)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
