// Serial vs OpenMP kernel comparison on construction-sized inputs:
// GF(2) rank on the largest boundary matrix of delta(6,11), downward-closure
// enumeration, and the cs-neighborliness scan.

#include <benchmark/benchmark.h>

#include <random>

#include "csph/construction.hpp"
#include "csph/kernels.hpp"
#include "csph/verify.hpp"

using namespace csph;
using kernels::Exec;

namespace {

Builder& shared_builder() {
    static Builder b;
    return b;
}

kernels::BitMatrix boundary_matrix(const Complex& a, int k) {
    const std::vector<Face> faces = kernels::enumerate_faces(a, Exec::parallel);
    std::unordered_map<Face, int, FaceHash> rows, cols;
    for (const Face& f : faces) {
        if (f.dim() == k - 1) rows.emplace(f, static_cast<int>(rows.size()));
        if (f.dim() == k) cols.emplace(f, static_cast<int>(cols.size()));
    }
    kernels::BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (const auto& [face, col] : cols)
        for (Vertex v : face.vertices()) m.set(rows.at(face.without(v)), col);
    return m;
}

void bm_gf2_rank(benchmark::State& state, Exec exec) {
    const kernels::BitMatrix m = boundary_matrix(shared_builder().delta(6, 11), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::gf2_rank(m, exec));
    }
}

void bm_enumerate(benchmark::State& state, Exec exec) {
    const Complex& cp = shared_builder().cross_polytope_boundary(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::enumerate_faces(cp, exec));
    }
}

void bm_neighborly_scan(benchmark::State& state, Exec exec) {
    const Complex& s = shared_builder().delta(6, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::find_missing_cs_face(s, 3, 11, exec));
    }
}

void bm_homology(benchmark::State& state, Exec exec) {
    const Complex& s = shared_builder().delta(5, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_z2(s, exec));
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_gf2_rank, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_gf2_rank, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_enumerate, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_enumerate, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_neighborly_scan, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_neighborly_scan, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_homology, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_homology, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
