// Serial vs OpenMP polynomial multiplication, plus the map-based reference.
#include <random>

#include <benchmark/benchmark.h>

#include "geoprove/kernels.hpp"

namespace {

using geoprove::Integer;
using geoprove::Polynomial;
using geoprove::Term;
using geoprove::Variable;

Polynomial random_dense(std::mt19937_64& rng, int vars, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::uniform_int_distribution<int> exp(0, degree);
  std::vector<Polynomial::Monomial> mons;
  for (int i = 0; i < terms; ++i) {
    Term::Storage powers;
    for (int v = 0; v < vars; ++v) {
      const int e = exp(rng);
      if (e > 0) powers.push_back({v % 2 ? Variable::free(v + 1) : Variable::dependent(v + 1), static_cast<std::uint32_t>(e)});
    }
    mons.push_back({Term(std::move(powers)), Integer(coeff(rng))});
  }
  return Polynomial::from_monomials(std::move(mons));
}

struct Operands {
  Polynomial a, b;
};

Operands operands(int terms) {
  std::mt19937_64 rng(1234);
  return {random_dense(rng, 6, 5, terms), random_dense(rng, 6, 5, terms)};
}

void BM_MultiplySerial(benchmark::State& state) {
  const Operands op = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geoprove::kernels::multiply_chunked(op.a, op.b, false));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const Operands op = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geoprove::kernels::multiply_chunked(op.a, op.b, true));
}

void BM_MultiplyReference(benchmark::State& state) {
  const Operands op = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geoprove::kernels::multiply_reference(op.a, op.b));
}

BENCHMARK(BM_MultiplySerial)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_MultiplyParallel)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_MultiplyReference)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
