#include "csph/construction.hpp"

#include <algorithm>
#include <string>

namespace csph {

namespace {

std::string key_str(const char* what, int d, int i, int n) {
    return std::string(what) + "(d=" + std::to_string(d) + ", i=" + std::to_string(i) +
           ", n=" + std::to_string(n) + ")";
}

}  // namespace

const Complex& Builder::memoize(const ConstructionKey& key,
                                Complex (Builder::*build)(const ConstructionKey&)) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    // Build outside the lock; recursive calls re-enter memoize. A concurrent
    // duplicate build produces the identical value, so first-insert wins.
    auto value = std::make_unique<const Complex>((this->*build)(key));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(value));
    return *it->second;
}

const Complex& Builder::cross_polytope_boundary(int n) {
    if (n < 1)
        throw domain_error("cross_polytope_boundary: n must be >= 1");
    return memoize({ConstructionKey::Kind::crosspoly, n - 1, 0, n}, &Builder::build_crosspoly);
}

const Complex& Builder::delta(int d, int n) {
    if (d < 1 || n < d + 1)
        throw domain_error(key_str("delta", d, 0, n) + ": need d >= 1 and n >= d+1");
    if (d == 1) return memoize({ConstructionKey::Kind::cycle, 1, 0, n}, &Builder::build_cycle);
    return memoize({ConstructionKey::Kind::delta, d, 0, n}, &Builder::build_delta);
}

const Complex& Builder::ball(int d, int i, int n) {
    if (d < 1 || n < d + 1)
        throw domain_error(key_str("ball", d, i, n) + ": need d >= 1 and n >= d+1");
    if (i > ceil_half(d))
        throw domain_error(key_str("ball", d, i, n) + ": index i exceeds ceil(d/2)");
    if (i < 0) i = -1;  // every negative index is the same void complex
    return memoize({ConstructionKey::Kind::ball, d, i, n}, &Builder::build_ball);
}

const Complex& Builder::delta_variant(int d, int i, int n_plus_1) {
    if (d < 2 || i < 1 || i > ceil_half(d) || n_plus_1 < d + 2)
        throw domain_error(key_str("delta_variant", d, i, n_plus_1) +
                           ": need d >= 2, 1 <= i <= ceil(d/2), n >= d+2");
    return memoize({ConstructionKey::Kind::variant, d, i, n_plus_1}, &Builder::build_variant);
}

const Complex& Builder::special_ball_D(int k, int n) {
    if (k < 2 || n < 2 * k + 1)
        throw domain_error("special_ball_D(k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                           "): need k >= 2 and n >= 2k+1");
    return memoize({ConstructionKey::Kind::dball, 2 * k, 0, n}, &Builder::build_dball);
}

Complex Builder::build_crosspoly(const ConstructionKey& key) {
    const int n = key.n;
    std::vector<Face> facets;
    facets.reserve(1ull << n);
    std::vector<Vertex> verts(n);
    for (unsigned long long signs = 0; signs < (1ull << n); ++signs) {
        for (int j = 0; j < n; ++j)
            verts[j] = (signs >> j) & 1 ? -(j + 1) : (j + 1);
        std::sort(verts.begin(), verts.end());
        facets.push_back(Face::from_sorted(verts));
    }
    return Complex::from_maximal(std::move(facets));
}

Complex Builder::build_cycle(const ConstructionKey& key) {
    // The cycle (v_1, ..., v_n, -v_1, ..., -v_n, v_1).
    const int n = key.n;
    std::vector<Face> edges;
    edges.reserve(2 * n);
    for (int j = 1; j < n; ++j) {
        edges.push_back(Face{j, j + 1});
        edges.push_back(Face{-j, -(j + 1)});
    }
    edges.push_back(Face{n, -1});
    edges.push_back(Face{-n, 1});
    return Complex::from_maximal(std::move(edges));
}

Complex Builder::replace_with_cones(const Complex& sphere, const Complex& b, int new_pair) {
    if (!is_subcomplex(b, sphere))
        throw invariant_error("replacement ball is not a subcomplex of the sphere");
    const Complex nb = negate(b);

    // The two balls may not share facets, or the replacement would not
    // produce a sphere.
    std::vector<Face> shared;
    std::set_intersection(b.facets().begin(), b.facets().end(),
                          nb.facets().begin(), nb.facets().end(),
                          std::back_inserter(shared));
    if (!shared.empty())
        throw invariant_error("replacement ball shares facet " + shared.front().to_string() +
                              " with its antipode");

    const Complex core = facet_complement(facet_complement(sphere, b), nb);

    const Complex bd = boundary(b);
    const Complex nbd = boundary(nb);
    const Complex cone_pos = cone(bd, new_pair);
    const Complex cone_neg = cone(nbd, -new_pair);
    if (boundary(cone_pos) != bd || boundary(cone_neg) != nbd)
        throw invariant_error("replacement cone does not close up over the removed ball");

    return union_of(core, union_of(cone_pos, cone_neg));
}

Complex Builder::build_delta(const ConstructionKey& key) {
    const int d = key.d, n = key.n;
    if (n == d + 1) return cross_polytope_boundary(d + 1);
    const Complex& prev = delta(d, n - 1);
    const Complex& b = ball(d, ceil_half(d) - 1, n - 1);
    return replace_with_cones(prev, b, n);
}

Complex Builder::build_ball(const ConstructionKey& key) {
    const int d = key.d, i = key.i, n = key.n;
    if (i < 0) return Complex::void_complex();

    if (d == 1) {
        if (i == 0) return Complex::make({Face{-1, n}});
        // B^{1,1}: the complementary path (-v_1, ..., -v_n, v_1, ..., v_n).
        return facet_complement(delta(1, n), ball(1, 0, n));
    }

    if (d % 2 == 1 && i == ceil_half(d)) {
        // Odd-dimensional top index: the facet complement inside the sphere.
        return facet_complement(delta(d, n), ball(d, i - 1, n));
    }

    // B^{d,i}_n = (B^{d-1,i}_{n-1} * v_n) u ((-B^{d-1,i-1}_{n-1}) * (-v_n)).
    const Complex upper = cone(ball(d - 1, i, n - 1), n);
    const Complex lower = cone(negate(ball(d - 1, i - 1, n - 1)), -n);
    return union_of(upper, lower);
}

Complex Builder::build_variant(const ConstructionKey& key) {
    const int d = key.d, i = key.i, n = key.n - 1;
    const Complex& base = delta(d, n);
    const Complex& b = ball(d, i - 1, n);
    return replace_with_cones(base, b, n + 1);
}

Complex Builder::build_dball(const ConstructionKey& key) {
    const int k = key.d / 2, n = key.n;
    if (n == 2 * k + 1) return ball(2 * k, k, n);

    const int m = n - 1;
    const Complex& prev = special_ball_D(k, m);
    const Complex neg_prev = negate(prev);
    const Complex& b_mid = ball(2 * k, k - 1, m);      // B^{2k,k-1}_m
    const Complex& b_low = ball(2 * k - 1, k - 1, m);  // B^{2k-1,k-1}_m

    if (!is_subcomplex(b_mid, neg_prev))
        throw invariant_error("D-ball recursion: B^{2k,k-1} is not inside -D");

    const Complex trimmed = facet_complement(neg_prev, b_mid);
    const Complex lower_cone = cone(negate(b_low), -n);
    const Complex rim = facet_complement(boundary(b_mid), b_low);
    const Complex upper_cone = cone(rim, n);
    return union_of(trimmed, union_of(lower_cone, upper_cone));
}

}  // namespace csph
