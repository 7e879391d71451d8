// SPDX-License-Identifier: Apache-2.0
#include <complex>

#include <benchmark/benchmark.h>

#include "bscap/capacity.hpp"
#include "bscap/channel_model.hpp"
#include "bscap/monte_carlo.hpp"
#include "bscap/special_functions.hpp"

namespace {

using namespace bscap;

void BM_BesselK0(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::bessel_k0_scaled(x));
    x = x < 40.0 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_BesselK0);

void BM_BesselI0(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::bessel_i0_scaled(x));
    x = x < 40.0 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_BesselI0);

void BM_LnGammaComplex(benchmark::State& state) {
  std::complex<double> z(2.5, -7.0);
  for (auto _ : state) benchmark::DoNotOptimize(special::ln_gamma_complex(z));
}
BENCHMARK(BM_LnGammaComplex);

void BM_Pdf(benchmark::State& state) {
  const channel::ChannelParams p(10.0, 0.5);
  double g = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(channel::pdf(p, g));
    g = g < 100.0 ? g * 1.3 : 0.01;
  }
}
BENCHMARK(BM_Pdf);

// Arguments: SNR in dB, rho in percent.
void BM_CapacityQuadrature(benchmark::State& state) {
  const auto p = channel::params_from_receiver_snr(static_cast<double>(state.range(0)),
                                                   state.range(1) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(capacity::capacity_quadrature(p).value);
}
BENCHMARK(BM_CapacityQuadrature)->Args({0, 0})->Args({20, 50})->Args({40, 90});

void BM_CapacitySeries(benchmark::State& state) {
  const auto p = channel::params_from_receiver_snr(static_cast<double>(state.range(0)),
                                                   state.range(1) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(capacity::capacity_series(p).value);
}
BENCHMARK(BM_CapacitySeries)->Args({0, 0})->Args({20, 50})->Args({20, 90})->Unit(benchmark::kMillisecond);

void BM_MonteCarloCapacity(benchmark::State& state) {
  const channel::Parameterization p{channel::SnrMode::fixed_receiver_snr, 100.0, 0.5};
  mc::McConfig c;
  c.n_samples = static_cast<std::uint64_t>(state.range(0));
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mc::estimate_capacity(p, c).estimate);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloCapacity)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
