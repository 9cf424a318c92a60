#include <benchmark/benchmark.h>

#include <vector>

#include "polyaut/expr.hpp"
#include "polyaut/groebner.hpp"
#include "polyaut/jacobian.hpp"
#include "polyaut/obstruction.hpp"
#include "polyaut/random.hpp"

namespace {

using namespace polyaut;

void BM_Multiply(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  RandomPolynomials rng(1);
  RandomPolySpec spec;
  spec.max_degree = 4;
  spec.max_terms = static_cast<unsigned>(state.range(0));
  const auto a = rng.nonconstant(ctx, spec);
  const auto b = rng.nonconstant(ctx, spec);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16)->Arg(64);

void BM_Power(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  const auto p = parse_polynomial("x*y^2 + z^2*y - z^2 + y - 1", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(p.pow(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Power)->Arg(2)->Arg(4)->Arg(8);

void BM_GradientBasis(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  const auto q = parse_polynomial("x*y^2 + z^2*y - z^2 + y - 1", ctx);
  const Ideal ideal(ctx, gradient(q), MonomialOrder::grevlex(3));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_GradientBasis);

void BM_GradientBasisWithSubject(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  const auto q = parse_polynomial("x*y^2 + z^2*y - z^2 + y - 1", ctx);
  auto gens = gradient(q);
  gens.push_back(q);
  const Ideal ideal(ctx, gens, MonomialOrder::grevlex(3));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_GradientBasisWithSubject);

void BM_DependenceTest(benchmark::State& state) {
  auto ctx = make_context("x,y");
  const std::vector<Polynomial> pair{parse_polynomial("x^3 - x*y^2 + y^2 + x", ctx),
                                     parse_polynomial("x^2*y + y^3 - x*y + y", ctx)};
  for (auto _ : state) benchmark::DoNotOptimize(algebraically_dependent(pair));
}
BENCHMARK(BM_DependenceTest);

void BM_DependenceTestThreeVars(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  const std::vector<Polynomial> triple{parse_polynomial("x + y*z^2", ctx), parse_polynomial("y^2 - z", ctx),
                                       parse_polynomial("x*y + z^3", ctx)};
  for (auto _ : state) benchmark::DoNotOptimize(algebraically_dependent(triple));
}
BENCHMARK(BM_DependenceTestThreeVars);

void BM_ParseFormat(benchmark::State& state) {
  auto ctx = make_context("x,y,z");
  const std::string text = "(x + 2*y - z^2)^5 - 3/4*x*y*z";
  for (auto _ : state) benchmark::DoNotOptimize(format_polynomial(parse_polynomial(text, ctx)));
}
BENCHMARK(BM_ParseFormat);

}  // namespace

BENCHMARK_MAIN();
