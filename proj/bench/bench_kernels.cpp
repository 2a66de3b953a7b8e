// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "latpath/hankel.hpp"
#include "latpath/kernels.hpp"
#include "latpath/motzkin.hpp"

namespace k = latpath::kernels;
using latpath::OmegaPoly;

namespace {

std::vector<OmegaPoly> motzkin_coeffs(long n) {
  const auto s = latpath::motzkin_series(n);
  return {s.coeffs().begin(), s.coeffs().end()};
}

template <auto Convolve>
void BM_convolve(benchmark::State& state) {
  const auto a = motzkin_coeffs(state.range(0));
  std::vector<OmegaPoly> out(a.size());
  for (auto _ : state) {
    Convolve(a, a, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Inverse>
void BM_inverse(benchmark::State& state) {
  const auto m = latpath::motzkin_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Inverse(m));
}

template <auto Product>
void BM_product(benchmark::State& state) {
  const auto m = latpath::motzkin_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Product(m, m));
}

template <auto Step>
void BM_bareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = latpath::hankel_matrix({0, 1, 1, n});
  for (auto _ : state) {
    k::Grid a = h.entries;
    OmegaPoly prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      Step(a, p, prev);
      prev = a[p][p];
    }
    benchmark::DoNotOptimize(a.back().back());
  }
}

}  // namespace

BENCHMARK(BM_convolve<k::serial::convolve>)->Name("convolve/serial")->Arg(100)->Arg(200);
BENCHMARK(BM_convolve<k::parallel::convolve>)->Name("convolve/parallel")->Arg(100)->Arg(200);
BENCHMARK(BM_inverse<k::serial::unit_lower_inverse>)->Name("inverse/serial")->Arg(40)->Arg(80);
BENCHMARK(BM_inverse<k::parallel::unit_lower_inverse>)->Name("inverse/parallel")->Arg(40)->Arg(80);
BENCHMARK(BM_product<k::serial::tri_product>)->Name("product/serial")->Arg(40)->Arg(80);
BENCHMARK(BM_product<k::parallel::tri_product>)->Name("product/parallel")->Arg(40)->Arg(80);
BENCHMARK(BM_bareiss<k::serial::bareiss_step>)->Name("bareiss/serial")->Arg(16)->Arg(24);
BENCHMARK(BM_bareiss<k::parallel::bareiss_step>)->Name("bareiss/parallel")->Arg(16)->Arg(24);

BENCHMARK_MAIN();
