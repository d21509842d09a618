#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csph/construction.hpp"

using namespace csph;

namespace {

// Path complex (v_1, ..., v_m): edges between consecutive entries.
Complex path(const std::vector<Vertex>& verts) {
    std::vector<Face> edges;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        edges.push_back(Face{verts[i], verts[i + 1]});
    return Complex::make(std::move(edges));
}

// The explicit closed form of B^{3,1}_n:
//   ((v_{n-2}, ..., v_1, -v_{n-2}, ..., -v_1) * (v_{n-1}, v_n))
//   u ((v_1, -v_{n-2}) * (v_n, -v_{n-1}, -v_n))
// kept independent of the recursive construction as an oracle.
Complex jockusch_ball_closed_form(int n) {
    std::vector<Vertex> long_path;
    for (int j = n - 2; j >= 1; --j) long_path.push_back(j);
    for (int j = n - 2; j >= 1; --j) long_path.push_back(-j);
    const Complex left = join(path(long_path), Complex::make({Face{n - 1, n}}));
    const Complex right =
        join(Complex::make({Face{1, -(n - 2)}}), path({n, -(n - 1), -n}));
    return union_of(left, right);
}

}  // namespace

TEST_CASE("cross-polytope boundary") {
    Builder b;
    CHECK(b.cross_polytope_boundary(1) == Complex::make({Face{-1}, Face{1}}));
    CHECK(f_vector(b.cross_polytope_boundary(3)).counts ==
          std::vector<long long>{1, 6, 12, 8});
    CHECK(b.cross_polytope_boundary(4).facet_count() == 16);
    CHECK_THROWS_AS(b.cross_polytope_boundary(0), domain_error);
}

TEST_CASE("base cases: delta(d, d+1) is the cross-polytope boundary") {
    Builder b;
    for (int d = 1; d <= 6; ++d) {
        CHECK(b.delta(d, d + 1) == b.cross_polytope_boundary(d + 1));
        CHECK(b.delta(d, d + 1).facet_count() == (1ull << (d + 1)));
    }
}

TEST_CASE("cross-polytope boundary is the suspension of its predecessor") {
    Builder b;
    for (int n = 1; n <= 5; ++n)
        CHECK(suspension(b.cross_polytope_boundary(n), n + 1, -(n + 1)) ==
              b.cross_polytope_boundary(n + 1));
}

TEST_CASE("delta(1, n) is the alternating cycle") {
    Builder b;
    CHECK(b.delta(1, 3) == Complex::make({Face{1, 2}, Face{2, 3}, Face{-1, 3},
                                          Face{-1, -2}, Face{-2, -3}, Face{-3, 1}}));
    for (int n = 2; n <= 8; ++n) {
        CHECK(b.delta(1, n).facet_count() == 2u * n);
        CHECK(euler_characteristic(b.delta(1, n)) == 0);
    }
}

TEST_CASE("delta(1, n) agrees with one generic replacement step") {
    Builder b;
    for (int n = 3; n <= 7; ++n) {
        const Complex& prev = b.delta(1, n - 1);
        const Complex& ball = b.ball(1, 0, n - 1);
        const Complex core =
            facet_complement(facet_complement(prev, ball), negate(ball));
        const Complex stepped =
            union_of(core, union_of(cone(boundary(ball), n),
                                    cone(boundary(negate(ball)), -n)));
        CHECK(stepped == b.delta(1, n));
    }
}

TEST_CASE("delta(2, 4): symmetric stacking of the octahedron") {
    Builder b;
    const Complex& d24 = b.delta(2, 4);
    CHECK(d24.facet_count() == 12);
    CHECK(f_vector(d24).counts == std::vector<long long>{1, 8, 18, 12});
    CHECK(euler_characteristic(d24) == 2);

    const Complex expected = Complex::make({
        Face{1, 2, 3}, Face{1, -2, 3}, Face{1, 2, -3}, Face{-1, -2, 3},
        Face{-1, 2, -3}, Face{-1, -2, -3},
        Face{-1, 2, 4}, Face{-1, 3, 4}, Face{2, 3, 4},
        Face{1, -2, -4}, Face{1, -3, -4}, Face{-2, -3, -4},
    });
    CHECK(d24 == expected);
}

TEST_CASE("Jockusch family f-vectors") {
    Builder b;
    for (long long n = 4; n <= 9; ++n) {
        const FVector fv = f_vector(b.delta(3, static_cast<int>(n)));
        CHECK(fv.counts == std::vector<long long>{1, 2 * n, 2 * n * n - 2 * n,
                                                  4 * n * n - 8 * n, 2 * n * n - 4 * n});
        CHECK(fv.euler() == 0);
    }
}

TEST_CASE("B^{d,0} is a simplex on {-v_1, v_{n-d+1}, ..., v_n}") {
    Builder b;
    for (int d = 1; d <= 6; ++d) {
        for (int n = d + 1; n <= d + 4; ++n) {
            std::vector<Vertex> verts{-1};
            for (int j = n - d + 1; j <= n; ++j) verts.push_back(j);
            CHECK(b.ball(d, 0, n) == Complex::make({Face(verts)}));
        }
    }
}

TEST_CASE("negative index balls are void") {
    Builder b;
    CHECK(b.ball(3, -1, 5).is_void());
    CHECK(b.ball(4, -2, 6).is_void());
}

TEST_CASE("B^{1,1} is the complementary path") {
    Builder b;
    CHECK(b.ball(1, 1, 3) == Complex::make({Face{-1, -2}, Face{-2, -3}, Face{-3, 1},
                                            Face{1, 2}, Face{2, 3}}));
    // the path (-v_1, -v_2, -v_3, -v_4, v_1, v_2, v_3, v_4)
    CHECK(b.ball(1, 1, 4) ==
          Complex::make({Face{-1, -2}, Face{-2, -3}, Face{-3, -4}, Face{-4, 1},
                         Face{1, 2}, Face{2, 3}, Face{3, 4}}));
    CHECK(negate(b.ball(1, 0, 5)) == Complex::make({Face{1, -5}}));
}

TEST_CASE("B^{3,1} matches the closed form") {
    Builder b;
    for (int n = 4; n <= 8; ++n) {
        const Complex& recursive = b.ball(3, 1, n);
        CHECK(recursive == jockusch_ball_closed_form(n));
        CHECK(recursive.facet_count() == static_cast<std::size_t>(2 * n - 3));
    }
}

TEST_CASE("every facet of B^{d,i} contains the last pair, faces are antipode-free") {
    Builder b;
    for (int d = 2; d <= 5; ++d) {
        for (int n = d + 1; n <= d + 3; ++n) {
            for (int i = 0; i <= floor_half(d); ++i) {
                for (const Face& f : b.ball(d, i, n).facets()) {
                    CHECK((f.contains(n) || f.contains(-n)));
                    CHECK_FALSE(f.contains_antipodal_pair());
                }
            }
        }
    }
}

TEST_CASE("nesting: -B^{d,i-1} inside B^{d,i}") {
    Builder b;
    for (int d = 1; d <= 5; ++d)
        for (int n = d + 1; n <= d + 3; ++n)
            for (int i = 0; i <= ceil_half(d); ++i)
                CHECK(is_subcomplex(negate(b.ball(d, i - 1, n)), b.ball(d, i, n)));
}

TEST_CASE("odd top ball is the facet complement of the sphere") {
    Builder b;
    for (int n = 4; n <= 7; ++n) {
        const Complex& sphere = b.delta(3, n);
        const Complex& low = b.ball(3, 1, n);
        const Complex& topb = b.ball(3, 2, n);
        CHECK(union_of(low, topb) == sphere);
        CHECK(facet_complement(sphere, low) == topb);
    }
}

TEST_CASE("variant at the top index reproduces delta") {
    Builder b;
    CHECK(b.delta_variant(2, 1, 5) == b.delta(2, 5));
    CHECK(b.delta_variant(3, 2, 6) == b.delta(3, 6));
    CHECK(b.delta_variant(4, 2, 7) == b.delta(4, 7));
}

TEST_CASE("delta_variant(4,1,6) shape") {
    Builder b;
    const Complex& v = b.delta_variant(4, 1, 6);
    CHECK(euler_characteristic(v) == 2);
    CHECK(f_vector(v).f(0) == 12);
}

TEST_CASE("special ball D_n") {
    Builder b;
    CHECK(b.special_ball_D(2, 5) == b.ball(4, 2, 5));
    CHECK(boundary(b.special_ball_D(2, 6)) == b.delta(3, 6));
    const Complex& d6 = b.special_ball_D(2, 6);
    CHECK(union_of(d6, negate(d6)) == b.delta(4, 6));
}

TEST_CASE("domain errors") {
    Builder b;
    CHECK_THROWS_AS(b.delta(0, 3), domain_error);
    CHECK_THROWS_AS(b.delta(2, 2), domain_error);
    CHECK_THROWS_AS(b.ball(3, 3, 5), domain_error);
    CHECK_THROWS_AS(b.ball(2, 1, 2), domain_error);
    CHECK_THROWS_AS(b.delta_variant(2, 1, 3), domain_error);
    CHECK_THROWS_AS(b.delta_variant(3, 0, 5), domain_error);
    CHECK_THROWS_AS(b.delta_variant(3, 3, 6), domain_error);
    CHECK_THROWS_AS(b.special_ball_D(1, 4), domain_error);
    CHECK_THROWS_AS(b.special_ball_D(2, 4), domain_error);
}

TEST_CASE("memoization returns stable references") {
    Builder b;
    const Complex* first = &b.delta(3, 6);
    const Complex* second = &b.delta(3, 6);
    CHECK(first == second);
    const Complex* ball_once = &b.ball(4, 2, 6);
    CHECK(ball_once == &b.ball(4, 2, 6));
}
