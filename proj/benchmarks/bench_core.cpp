#include <random>

#include <benchmark/benchmark.h>

#include "stringy/epoly.hpp"
#include "stringy/hitchin.hpp"
#include "stringy/hklinear.hpp"
#include "stringy/intlattice.hpp"
#include "stringy/orbifold.hpp"
#include "stringy/torus.hpp"

namespace {

using namespace stringy;

void bm_epoly_multiply(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const EPolynomial factor = e_abelian_variety(d);
    for (auto _ : state) {
        EPolynomial product = factor * factor;
        benchmark::DoNotOptimize(product);
    }
}
BENCHMARK(bm_epoly_multiply)->Arg(4)->Arg(8)->Arg(16);

void bm_rank2_stringy(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const OrbifoldPresentation presentation = generate_rank2_presentation(g, 1);
    for (auto _ : state) {
        EPolynomial total = stringy_e(presentation);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_rank2_stringy)->Arg(2)->Arg(4)->Arg(6);

void bm_alternating_normal_form(benchmark::State& state) {
    std::mt19937_64 rng(12345);
    const int k = static_cast<int>(state.range(0));
    const IntMatrix pairing = random_polarized_lattice(k, rng).pairing();
    for (auto _ : state) {
        AlternatingNormalForm form = alternating_normal_form(pairing);
        benchmark::DoNotOptimize(form);
    }
}
BENCHMARK(bm_alternating_normal_form)->Arg(2)->Arg(4);

void bm_restricted_volume(benchmark::State& state) {
    std::mt19937_64 rng(777);
    const int k = static_cast<int>(state.range(0));
    const HyperkahlerModel model = HyperkahlerModel::standard(k);
    const LinearSubspace plane = random_holomorphic_lagrangian(k, rng);
    for (auto _ : state) {
        ComplexRat volume = restricted_volume(model, plane);
        benchmark::DoNotOptimize(volume);
    }
}
BENCHMARK(bm_restricted_volume)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
