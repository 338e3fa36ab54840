// Serial vs OpenMP versions of the enumeration kernels. Each pair runs the
// same input; Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "toporep/hardness.hpp"
#include "toporep/representations.hpp"
#include "toporep/solvers.hpp"
#include "toporep/topo.hpp"

using namespace toporep;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_BuildPhi(benchmark::State& s) {
    auto g = gen_kneser(6, 2).graph;
    auto chi = chromatic_number(g);
    auto a = coloring_assignment(chi.witness.colors, chi.chi);
    auto hp = build_hom_poset(g);
    for (auto _ : s) benchmark::DoNotOptimize(build_phi(g, a, hp, exec_of(s)));
    label(s);
}

void BM_Extract(benchmark::State& s) {
    auto g = gen_kneser(6, 2).graph;
    auto chi = chromatic_number(g);
    auto a = coloring_assignment(chi.witness.colors, chi.chi);
    for (auto _ : s) benchmark::DoNotOptimize(extract_colorful_bipartite(g, a, kDefaultPosetCap, exec_of(s)));
    label(s);
}

void BM_MinrankEnumerate(benchmark::State& s) {
    // complement of C6 over GF(2): 2^18 normalized matrices
    auto target = complement(gen_cycle(6));
    for (auto _ : s) benchmark::DoNotOptimize(minrank_enumerate(target, FieldSpec::prime(2), exec_of(s)));
    label(s);
}

void BM_BruteForceSat(benchmark::State& s) {
    // unsatisfiable, so every assignment is visited
    std::string body;
    for (int v = 1; v <= 20; v += 3) {
        int a = v, b = std::min(v + 1, 20), c = std::min(v + 2, 20);
        body += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " 0\n";
        body += "-" + std::to_string(a) + " -" + std::to_string(b) + " -" + std::to_string(c) + " 0\n";
    }
    body += "1 1 1 0\n-1 -1 -1 0\n";
    auto inst = parse_monotone_3sat("p cnf 20 16\n" + body);
    for (auto _ : s) benchmark::DoNotOptimize(brute_force_sat(inst, exec_of(s)));
    label(s);
}

}  // namespace

BENCHMARK(BM_BuildPhi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extract)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinrankEnumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSat)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
