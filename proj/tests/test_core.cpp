#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csph/complex.hpp"
#include "csph/kernels.hpp"
#include "test_helpers.hpp"

using namespace csph;
using csph::testing::random_complex;
using csph::testing::relabel_shift;

TEST_CASE("face canonical order and validation") {
    const Face f{3, -2, 1};
    CHECK(f.vertices() == std::vector<Vertex>{-2, 1, 3});
    CHECK(f.dim() == 2);
    CHECK_THROWS_AS(Face({1, 1, 2}), malformed_face_error);
    CHECK_THROWS_AS(Face({0, 2}), malformed_face_error);

    CHECK(Face{-2, 1}.negated() == Face{-1, 2});
    CHECK(Face{-2, 1}.negated().negated() == Face{-2, 1});
    CHECK(Face{1, -1}.contains_antipodal_pair());
    CHECK_FALSE(Face{1, 2, -3}.contains_antipodal_pair());
}

TEST_CASE("make_complex absorbs non-maximal faces") {
    CHECK(Complex::make({}).is_void());
    CHECK(Complex::make({Face{}}).is_empty_complex());

    const Complex c = Complex::make({Face{1, 2}, Face{1}});
    CHECK(c.facets() == std::vector<Face>{Face{1, 2}});

    const Complex d = Complex::make({Face{1, 2}, Face{2, 3}});
    CHECK(d.facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});

    // {} is absorbed as soon as any other facet exists
    CHECK(Complex::make({Face{}, Face{1}}).facets() == std::vector<Face>{Face{1}});
}

TEST_CASE("absorption is stable under re-adding faces") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex a = random_complex(rng);
        if (a.is_void()) continue;
        std::vector<Face> facets = a.facets();
        // re-add every subface of the first facet
        for (Vertex v : facets.front().vertices()) facets.push_back(facets.front().without(v));
        CHECK(Complex::make(facets) == a);
    }
}

TEST_CASE("join identities") {
    const Complex edge = Complex::make({Face{1, 2}});
    CHECK(join(Complex::void_complex(), edge).is_void());
    CHECK(join(edge, Complex::void_complex()).is_void());
    CHECK(join(Complex::empty_complex(), edge) == edge);
    CHECK(join(Complex::make({Face{1}}), Complex::make({Face{2}})) == edge);
    CHECK_THROWS_AS(join(edge, Complex::make({Face{2, 3}})), disjointness_error);
}

TEST_CASE("join is commutative and associative on disjoint supports") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = random_complex(rng, 3, 4, 3);
        const Complex b = relabel_shift(random_complex(rng, 3, 4, 3), 10);
        const Complex c = relabel_shift(random_complex(rng, 3, 4, 3), 20);
        CHECK(join(a, b) == join(b, a));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
    }
}

TEST_CASE("cone and suspension") {
    const Complex pt_boundary = Complex::make({Face{1}, Face{2}});
    CHECK(cone(pt_boundary, 3) == Complex::make({Face{1, 3}, Face{2, 3}}));
    CHECK(cone(Complex::void_complex(), 5).is_void());
    CHECK(cone(Complex::empty_complex(), 5) == Complex::make({Face{5}}));

    CHECK(suspension(Complex::empty_complex(), 1, -1) == Complex::make({Face{1}, Face{-1}}));
    CHECK_THROWS_AS(suspension(Complex::empty_complex(), 2, 2), precondition_error);

    // suspension of a 6-cycle: 6 edges x 2 apexes = 12 triangles
    const Complex cycle = Complex::make({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{4, 5},
                                         Face{5, 6}, Face{1, 6}});
    const Complex susp = suspension(cycle, 7, -7);
    CHECK(susp.facet_count() == 12);
    CHECK(f_vector(susp).counts == std::vector<long long>{1, 8, 18, 12});
}

TEST_CASE("link") {
    const Complex tri_boundary =
        Complex::make({Face{1, 2}, Face{1, 3}, Face{2, 3}});
    CHECK(link(tri_boundary, Face{1}) == Complex::make({Face{2}, Face{3}}));
    CHECK(link(tri_boundary, Face{}) == tri_boundary);
    CHECK_THROWS_AS(link(tri_boundary, Face{7}), not_a_face_error);

    // link of a vertex in the octahedron is the square on the other pairs
    std::vector<Face> oct;
    for (int s = 0; s < 8; ++s)
        oct.push_back(Face{(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
    const Complex octahedron = Complex::make(oct);
    const Complex square =
        Complex::make({Face{-3, -2}, Face{-3, 2}, Face{-2, 3}, Face{2, 3}});
    CHECK(link(octahedron, Face{1}) == square);
}

TEST_CASE("link of join is join of links") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = random_complex(rng, 3, 4, 3);
        const Complex b = relabel_shift(random_complex(rng, 3, 4, 3), 10);
        if (a.is_void() || b.is_void()) continue;
        const Face fa = a.facets()[rng() % a.facet_count()];
        const Face fb = b.facets()[rng() % b.facet_count()];
        const Face joint = disjoint_union(fa, fb);
        CHECK(link(join(a, b), joint) == join(link(a, fa), link(b, fb)));
    }
}

TEST_CASE("skeleton") {
    const Complex simplex = Complex::make({Face{1, 2, 3}});
    CHECK(skeleton(simplex, 1) == Complex::make({Face{1, 2}, Face{1, 3}, Face{2, 3}}));
    CHECK(skeleton(simplex, 2) == simplex);
    CHECK(skeleton(simplex, 5) == simplex);
    CHECK(skeleton(simplex, -1).is_empty_complex());
    CHECK(skeleton(Complex::void_complex(), 2).is_void());
    CHECK_THROWS_AS(skeleton(simplex, -2), precondition_error);

    // 1-skeleton of the 4-dimensional cross-polytope boundary:
    // C(8,2) - 4 antipodal pairs = 24 edges
    std::vector<Face> cp4;
    for (int s = 0; s < 16; ++s)
        cp4.push_back(Face{(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3,
                           (s & 8) ? -4 : 4});
    CHECK(f_vector(skeleton(Complex::make(cp4), 1)).f(1) == 24);
}

TEST_CASE("facet complement") {
    const Complex square =
        Complex::make({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
    CHECK(facet_complement(square, square).is_void());
    CHECK(facet_complement(square, Complex::void_complex()) == square);

    const Complex path = facet_complement(square, Complex::make({Face{1, 2}}));
    CHECK(path == Complex::make({Face{2, 3}, Face{3, 4}, Face{1, 4}}));

    CHECK_THROWS_AS(facet_complement(square, Complex::make({Face{1, 3}})),
                    precondition_error);
    CHECK_THROWS_AS(facet_complement(square, Complex::make({Face{1}})),
                    precondition_error);
    // non-pure ambient
    CHECK_THROWS_AS(
        facet_complement(Complex::make({Face{1, 2}, Face{3}}), Complex::make({Face{3}})),
        precondition_error);
}

TEST_CASE("boundary") {
    CHECK(boundary(Complex::make({Face{1, 2, 3}})) ==
          Complex::make({Face{1, 2}, Face{1, 3}, Face{2, 3}}));
    CHECK(boundary(Complex::make({Face{5}})).is_empty_complex());
    CHECK(boundary(Complex::void_complex()).is_void());

    std::vector<Face> oct;
    for (int s = 0; s < 8; ++s)
        oct.push_back(Face{(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
    CHECK(boundary(Complex::make(oct)).is_empty_complex());

    // three triangles around one edge
    const Complex fan = Complex::make({Face{1, 2, 3}, Face{1, 2, 4}, Face{1, 2, 5}});
    CHECK_THROWS_AS(boundary(fan), pseudomanifold_error);
    CHECK_THROWS_AS(boundary(Complex::make({Face{1, 2}, Face{3}})), precondition_error);
    CHECK_THROWS_AS(boundary(Complex::empty_complex()), precondition_error);
}

TEST_CASE("negate") {
    CHECK(negate(Complex::make({Face{1, 2}})) == Complex::make({Face{-2, -1}}));
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = random_complex(rng);
        CHECK(negate(negate(a)) == a);
        CHECK(f_vector(negate(a)) == f_vector(a));
    }
}

TEST_CASE("union and intersection") {
    const Complex a = Complex::make({Face{1, 2}});
    CHECK(union_of(a, Complex::void_complex()) == a);
    CHECK(intersection_of(a, a) == a);
    CHECK(intersection_of(a, Complex::void_complex()).is_void());
    CHECK(intersection_of(a, Complex::make({Face{3}})).is_empty_complex());

    // the two cones B^{1,1}_2 * v_3 and (-B^{1,0}_2) * (-v_3) meet in -B^{1,0}_2
    const Complex d1 = Complex::make({Face{-1, -2, 3}, Face{-2, 1, 3}, Face{1, 2, 3}});
    const Complex d2 = Complex::make({Face{1, -2, -3}});
    CHECK(intersection_of(d1, d2) == Complex::make({Face{-2, 1}}));
}

TEST_CASE("euler characteristic is additive") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        const Complex a = random_complex(rng);
        const Complex b = random_complex(rng);
        CHECK(euler_characteristic(union_of(a, b)) ==
              euler_characteristic(a) + euler_characteristic(b) -
                  euler_characteristic(intersection_of(a, b)));
    }
}

TEST_CASE("f-vector basics") {
    std::vector<Face> oct;
    for (int s = 0; s < 8; ++s)
        oct.push_back(Face{(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
    const FVector fv = f_vector(Complex::make(oct));
    CHECK(fv.counts == std::vector<long long>{1, 6, 12, 8});
    CHECK(fv.euler() == 2);
    CHECK(fv.f(-1) == 1);
    CHECK(fv.f(2) == 8);
    CHECK(fv.f(5) == 0);

    CHECK(f_vector(Complex::void_complex()).counts.empty());
    CHECK(f_vector(Complex::empty_complex()).counts == std::vector<long long>{1});
    CHECK(euler_characteristic(Complex::empty_complex()) == 0);
}

TEST_CASE("is_subcomplex") {
    const Complex a = Complex::make({Face{1, 2, 3}});
    CHECK(is_subcomplex(Complex::void_complex(), a));
    CHECK(is_subcomplex(a, a));
    CHECK(is_subcomplex(Complex::make({Face{1, 3}}), a));
    CHECK_FALSE(is_subcomplex(a, Complex::make({Face{1, 3}})));
    CHECK(is_subcomplex(Complex::empty_complex(), a));
    CHECK_FALSE(is_subcomplex(Complex::empty_complex(), Complex::void_complex()));

    // large ids bypass the bitmask fast path
    const Complex big = Complex::make({Face{100, 200}});
    CHECK(is_subcomplex(Complex::make({Face{100}}), big));
    CHECK_FALSE(is_subcomplex(Complex::make({Face{300}}), big));
}
