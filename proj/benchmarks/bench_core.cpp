// Microbenchmarks for the hot paths: ring arithmetic, skew-polynomial
// multiplication and division, pseudo-linear steps (matrix route vs sparse
// recursion), matrix construction and the enumeration oracles.

#include "skewcode/code.hpp"
#include "skewcode/examples.hpp"
#include "skewcode/oracle.hpp"
#include "skewcode/plt.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace skewcode;

namespace {

context_ptr gf9_frobenius() {
    auto r = ring::gf(3, 2);
    return make_context(r, endo::frobenius(r, 1));
}

std::vector<elem> random_elems(const ring_ptr& r, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, r->size() - 1);
    std::vector<elem> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(r->element(pick(rng)));
    return out;
}

skew_poly random_monic(const context_ptr& ctx, size_t deg, uint64_t seed) {
    auto c = random_elems(ctx->r, deg + 1, seed);
    c[deg] = ctx->r->one();
    return skew_poly::from_coeffs(ctx, std::move(c));
}

void bm_ring_mul(benchmark::State& state) {
    auto r = ring::dual_numbers(ring::zmod(9));
    auto xs = random_elems(r, 1024, 1);
    auto ys = random_elems(r, 1024, 2);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i & 1023] * ys[(i * 7) & 1023]);
        ++i;
    }
}
BENCHMARK(bm_ring_mul);

void bm_skew_poly_mul(benchmark::State& state) {
    auto ctx = gf9_frobenius();
    size_t deg = size_t(state.range(0));
    skew_poly p = random_monic(ctx, deg, 3), q = random_monic(ctx, deg, 4);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_skew_poly_mul)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void bm_right_divmod(benchmark::State& state) {
    auto ctx = gf9_frobenius();
    size_t deg = size_t(state.range(0));
    skew_poly f = random_monic(ctx, 2 * deg, 5);
    skew_poly g = random_monic(ctx, deg, 6);
    for (auto _ : state) benchmark::DoNotOptimize(right_divmod(f, g));
}
BENCHMARK(bm_right_divmod)->RangeMultiplier(2)->Range(4, 64);

// Full matrix route vs the componentwise recursion on a sparse (constacyclic)
// modulus, where the recursion should win by a wide margin.
void bm_plt_apply(benchmark::State& state) {
    auto ctx = gf9_frobenius();
    size_t n = size_t(state.range(0));
    plt t(skew_poly::xn_minus(ctx, n, ctx->r->one()));
    auto x = random_elems(ctx->r, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(t.apply(x));
}
BENCHMARK(bm_plt_apply)->RangeMultiplier(2)->Range(8, 64);

void bm_plt_recursive_step(benchmark::State& state) {
    auto ctx = gf9_frobenius();
    size_t n = size_t(state.range(0));
    plt t(skew_poly::xn_minus(ctx, n, ctx->r->one()));
    auto x = random_elems(ctx->r, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(t.recursive_step(x));
}
BENCHMARK(bm_plt_recursive_step)->RangeMultiplier(2)->Range(8, 64);

void bm_generating_matrix(benchmark::State& state) {
    auto ctx = gf9_frobenius();
    size_t n = size_t(state.range(0));
    skew_poly g = skew_poly::from_coeffs(ctx, {-ctx->r->one(), ctx->r->one()});
    skew_poly f = skew_poly::xn_minus(ctx, n, ctx->r->one());
    for (auto _ : state) {
        principal_code c(f, g);
        benchmark::DoNotOptimize(c.generating_matrix());
    }
}
BENCHMARK(bm_generating_matrix)->RangeMultiplier(2)->Range(8, 64);

void bm_enumerate_code(benchmark::State& state) {
    principal_code c = gallery::example6_code();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_code(c));
}
BENCHMARK(bm_enumerate_code);

void bm_brute_dual(benchmark::State& state) {
    principal_code c = gallery::example6_code();
    code_set words = enumerate_code(c);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_dual(words, c.generating_matrix()));
}
BENCHMARK(bm_brute_dual);

} // namespace

BENCHMARK_MAIN();
