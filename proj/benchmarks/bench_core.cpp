#include <benchmark/benchmark.h>

#include <random>

#include "orbitcodes/distance.hpp"
#include "orbitcodes/linkage.hpp"
#include "orbitcodes/orbit.hpp"
#include "orbitcodes/parse.hpp"

using namespace orbitcodes;

namespace {

Field f212() {
    return Field::make(2, 12, std::vector<unsigned>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
}

void bm_field_mul_tables(benchmark::State& state) {
    Field f = f212();
    std::mt19937_64 rng(1);
    FieldElement a = f.element(1 + rng() % (f.size() - 1));
    FieldElement b = f.element(1 + rng() % (f.size() - 1));
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bm_field_mul_tables);

void bm_field_mul_poly(benchmark::State& state) {
    FieldOptions opts;
    opts.table_threshold = 0;
    Field f = Field::make(2, 12, f212().spec().modulus, opts);
    std::mt19937_64 rng(1);
    FieldElement a = f.element(1 + rng() % (f.size() - 1));
    FieldElement b = f.element(1 + rng() % (f.size() - 1));
    for (auto _ : state) {
        a = f.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bm_field_mul_poly);

void bm_rref_6x12(benchmark::State& state) {
    Field f = f212();
    std::mt19937_64 rng(2);
    Matrix m(6, 12, 2);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 12; ++j) m(i, j) = rng() & 1;
    for (auto _ : state) {
        Matrix c = m;
        rref_in_place(c);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_rref_6x12);

void bm_distance_multiset(benchmark::State& state) {
    Field f = f212();
    Subspace u = parse_generator(f, "F(2)+a^1*F(2)+a^3*F(2)");
    for (auto _ : state) {
        DistanceReport rep = distance_multiset(u);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bm_distance_multiset);

void bm_distance_bruteforce(benchmark::State& state) {
    Field f = f212();
    Subspace u = parse_generator(f, "F(2)+a^1*F(2)+a^3*F(2)");
    for (auto _ : state) {
        DistanceReport rep = distance_bruteforce(u, 1, true);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bm_distance_bruteforce);

void bm_linkage_pairwise(benchmark::State& state) {
    Field f6 = Field::make(2, 6, std::vector<unsigned>{1, 1, 0, 0, 0, 0, 1});
    ConstituentCode spread = ConstituentCode::from_orbit(spread_code(f6, 3), 6);
    LinkedCode linked = link_two(spread, spread);
    for (auto _ : state) {
        unsigned d = verified_min_distance(linked);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_linkage_pairwise);

} // namespace

BENCHMARK_MAIN();
