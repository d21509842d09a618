#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csph/construction.hpp"
#include "csph/kernels.hpp"
#include "test_helpers.hpp"

using namespace csph;
using namespace csph::kernels;
using csph::testing::random_complex;

TEST_CASE("gf2 rank on fixed matrices") {
    BitMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i);
    CHECK(gf2_rank(id, Exec::serial) == 4);

    BitMatrix z(3, 5);
    CHECK(gf2_rank(z, Exec::serial) == 0);

    // two equal rows
    BitMatrix m(2, 3);
    m.set(0, 0);
    m.set(0, 2);
    m.set(1, 0);
    m.set(1, 2);
    CHECK(gf2_rank(m, Exec::serial) == 1);
}

TEST_CASE("gf2 rank: packed serial, packed parallel and byte reference agree") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 90);
        const int cols = 1 + static_cast<int>(rng() % 130);
        BitMatrix m(rows, cols);
        std::vector<std::vector<std::uint8_t>> ref(rows, std::vector<std::uint8_t>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 3 == 0) {
                    m.set(r, c);
                    ref[r][c] = 1;
                }
        const int rk_ref = gf2_rank_reference(ref);
        CHECK(gf2_rank(m, Exec::serial) == rk_ref);
        CHECK(gf2_rank(m, Exec::parallel) == rk_ref);
        CHECK(rk_ref <= std::min(rows, cols));
    }
}

TEST_CASE("gf2 rank parallel path on a large matrix") {
    std::mt19937 rng(8);
    const int rows = 900, cols = 700;
    BitMatrix m(rows, cols);
    std::vector<std::vector<std::uint8_t>> ref(rows, std::vector<std::uint8_t>(cols, 0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() % 5 == 0) {
                m.set(r, c);
                ref[r][c] = 1;
            }
    BitMatrix copy = m;
    const int want = gf2_rank_reference(std::move(ref));
    CHECK(gf2_rank(std::move(m), Exec::parallel) == want);
    CHECK(gf2_rank(std::move(copy), Exec::serial) == want);
}

TEST_CASE("face enumeration matches the reference") {
    std::mt19937 rng(2025);
    for (int trial = 0; trial < 120; ++trial) {
        const Complex a = random_complex(rng, 5, 10, 5);
        const auto ref = enumerate_faces_reference(a);
        CHECK(enumerate_faces(a, Exec::serial) == ref);
        CHECK(enumerate_faces(a, Exec::parallel) == ref);
        CHECK(std::is_sorted(ref.begin(), ref.end()));
    }
}

TEST_CASE("cross-polytope closure has 3^n faces") {
    Builder b;
    for (int n = 1; n <= 6; ++n) {
        const auto faces = enumerate_faces(b.cross_polytope_boundary(n), Exec::parallel);
        long long want = 1;
        for (int j = 0; j < n; ++j) want *= 3;
        CHECK(static_cast<long long>(faces.size()) == want);
    }
}

TEST_CASE("enumerate_faces_up_to truncates by dimension") {
    Builder b;
    const Complex& oct = b.cross_polytope_boundary(3);
    const auto edges_down = enumerate_faces_up_to(oct, 1, Exec::serial);
    // 1 empty + 6 vertices + 12 edges
    CHECK(edges_down.size() == 19);
    CHECK(enumerate_faces_up_to(oct, -1, Exec::serial).size() == 1);
}

TEST_CASE("missing cs-face scan: parallel, serial and reference agree") {
    Builder b;
    std::mt19937 rng(606);

    // the cross-polytope boundary misses nothing at any i
    for (int n = 2; n <= 5; ++n) {
        const Complex& cp = b.cross_polytope_boundary(n);
        for (int i = 0; i <= n; ++i) {
            CHECK_FALSE(find_missing_cs_face(cp, i, n, Exec::serial).has_value());
            CHECK_FALSE(find_missing_cs_face(cp, i, n, Exec::parallel).has_value());
            CHECK_FALSE(find_missing_cs_face_reference(cp, i, n).has_value());
        }
    }

    // dropping one facet of crosspoly(n) leaves exactly that n-set missing at i = n
    for (int n = 3; n <= 5; ++n) {
        const Complex& cp = b.cross_polytope_boundary(n);
        const Face dropped = cp.facets()[rng() % cp.facet_count()];
        const Complex cut = facet_complement(cp, Complex::make({dropped}));
        CHECK_FALSE(find_missing_cs_face(cut, n - 1, n, Exec::parallel).has_value());
        const auto missing = find_missing_cs_face(cut, n, n, Exec::parallel);
        REQUIRE(missing.has_value());
        CHECK(*missing == dropped);
        CHECK(find_missing_cs_face(cut, n, n, Exec::serial) == missing);
        CHECK(find_missing_cs_face_reference(cut, n, n) == missing);
    }

    // random complexes: all three scans return the same witness
    for (int trial = 0; trial < 80; ++trial) {
        const Complex a = random_complex(rng, 4, 8, 4);
        if (a.is_void()) continue;
        for (int i = 0; i <= 3; ++i) {
            const auto ref = find_missing_cs_face_reference(a, i, 4);
            CHECK(find_missing_cs_face(a, i, 4, Exec::serial) == ref);
            CHECK(find_missing_cs_face(a, i, 4, Exec::parallel) == ref);
        }
    }
}

TEST_CASE("missing cs-face scan honors the budget guard") {
    Builder b;
    Budget tiny;
    tiny.max_subsets = 10;
    CHECK_THROWS_AS(find_missing_cs_face(b.cross_polytope_boundary(5), 4, 5,
                                         Exec::serial, tiny),
                    resource_error);
}

TEST_CASE("void complex misses the empty face") {
    const auto missing = find_missing_cs_face(Complex::void_complex(), 2, 3, Exec::serial);
    REQUIRE(missing.has_value());
    CHECK(missing->empty());
}
