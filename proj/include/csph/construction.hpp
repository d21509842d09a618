#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>

#include "csph/complex.hpp"

namespace csph {

/// Identifies one memoized complex of the inductive construction.
struct ConstructionKey {
    enum class Kind { crosspoly, cycle, delta, ball, variant, dball };
    Kind kind;
    int d = 0;  // dimension (2k for dball)
    int i = 0;  // neighborliness index (ball/variant only)
    int n = 0;  // vertex-pair count

    auto operator<=>(const ConstructionKey&) const = default;
};

/// Memoized builder for the whole construction family:
///
///   cross_polytope_boundary(n)   the boundary complex of the n-dimensional
///                                cross-polytope on V_n
///   delta(d, n)                  the cs d-sphere on V_n
///   ball(d, i, n)                the d-ball B^{d,i} on V_n (void for i < 0)
///   delta_variant(d, i, n+1)     one replacement step driven by B^{d,i-1}
///   special_ball_D(k, n)         the 2k-ball D_n filling delta(2k-1, n)
///                                inside delta(2k, n)
///
/// Construction steps whose validity rests on a theorem (the replacement
/// ball being a subcomplex, removed and added balls having equal
/// boundaries, facet-disjointness from its antipode) are asserted at run
/// time and raise invariant_error instead of silently producing garbage.
///
/// Results are immutable; references stay valid for the builder's lifetime.
/// All entry points are safe to call from multiple threads.
class Builder {
public:
    Builder() = default;
    Builder(const Builder&) = delete;
    Builder& operator=(const Builder&) = delete;

    const Complex& cross_polytope_boundary(int n);
    const Complex& delta(int d, int n);
    const Complex& ball(int d, int i, int n);
    const Complex& delta_variant(int d, int i, int n_plus_1);
    const Complex& special_ball_D(int k, int n);

private:
    const Complex& memoize(const ConstructionKey& key, Complex (Builder::*build)(const ConstructionKey&));

    Complex build_crosspoly(const ConstructionKey& key);
    Complex build_cycle(const ConstructionKey& key);
    Complex build_delta(const ConstructionKey& key);
    Complex build_ball(const ConstructionKey& key);
    Complex build_variant(const ConstructionKey& key);
    Complex build_dball(const ConstructionKey& key);

    /// The Lemma 3.1 step: remove the facets of ball and its antipode from
    /// sphere, cone their boundaries to +-new_pair.
    Complex replace_with_cones(const Complex& sphere, const Complex& ball, int new_pair);

    std::mutex mu_;
    std::map<ConstructionKey, std::unique_ptr<const Complex>> cache_;
};

/// ceil(d/2), the top neighborliness index of the d-dimensional family.
constexpr int ceil_half(int d) { return (d + 1) / 2; }
constexpr int floor_half(int d) { return d / 2; }

}  // namespace csph
