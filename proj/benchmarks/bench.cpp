#include "galred/elliptic.hpp"
#include "galred/tate.hpp"

#include <benchmark/benchmark.h>

using namespace galred;

namespace {

DualGraph gon(int n) {
    DualGraph g;
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back("v" + std::to_string(i));
        g.edges.push_back("e" + std::to_string(i));
        std::string k0 = "k" + std::to_string(2 * i), k1 = "k" + std::to_string(2 * i + 1);
        g.endpoints.push_back(k0);
        g.endpoints.push_back(k1);
        g.phi[k0] = g.phi[k1] = "e" + std::to_string(i);
        g.psi[k0] = "v" + std::to_string(i);
        g.psi[k1] = "v" + std::to_string((i + 1) % n);
    }
    return g;
}

void bm_kernel_basis_gon(benchmark::State& state) {
    DualGraph g = gon(static_cast<int>(state.range(0)));
    IntMatrix b = boundary_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(b));
}
BENCHMARK(bm_kernel_basis_gon)->Arg(8)->Arg(32)->Arg(64);

void bm_count_points(benchmark::State& state) {
    FqField f = FqField::make(state.range(0), 1);
    WeierstrassModel w{f, f.zero(), f.from_int(1), f.from_int(1)};
    for (auto _ : state) benchmark::DoNotOptimize(count_points(w, 2));
}
BENCHMARK(bm_count_points)->Arg(31)->Arg(101)->Arg(397);

void bm_count_fixed_twisted(benchmark::State& state) {
    FqField f = FqField::make(13, 1);
    WeierstrassModel w{f, f.zero(), f.zero(), f.from_int(1)};
    FqElem zeta = f.root_of_unity(3);
    CoordTwist t{zeta, f.one()};
    for (auto _ : state) benchmark::DoNotOptimize(count_fixed(w, t, 1));
}
BENCHMARK(bm_count_fixed_twisted);

void bm_elliptic_pipeline(benchmark::State& state) {
    WeierstrassCurve c{0, 0, 0, 0, Rat(49), 7};
    for (auto _ : state) {
        FibreDescriptor d = semistable_descriptor(classify(minimal_data(c)));
        benchmark::DoNotOptimize(l_factor(d));
        benchmark::DoNotOptimize(conductor_exponent(d));
    }
}
BENCHMARK(bm_elliptic_pipeline);

}  // namespace

BENCHMARK_MAIN();
