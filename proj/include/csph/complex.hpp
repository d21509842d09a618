#pragma once

#include <string>
#include <vector>

#include "csph/face.hpp"

namespace csph {

/// A simplicial complex stored by its facet set (the inclusion-maximal
/// faces), kept sorted lexicographically. Distinguishes the VOID complex
/// (no faces at all) from the EMPTY complex (exactly the face {}): the void
/// complex annihilates joins while the empty complex is their identity.
///
/// Equality is labeled equality: identical facet sets on identical vertex
/// ids, not isomorphism.
class Complex {
public:
    /// Constructs the void complex.
    Complex() = default;

    static Complex void_complex() { return Complex(); }
    static Complex empty_complex();

    /// Builds a complex from an arbitrary facet list: non-maximal entries
    /// are absorbed, duplicates dropped. An empty list yields VOID, the
    /// list [{}] yields EMPTY.
    static Complex make(std::vector<Face> facets);

    /// Trusts that `facets` is already an inclusion-antichain; sorts it.
    static Complex from_maximal(std::vector<Face> facets);

    bool is_void() const { return is_void_; }
    /// NONVOID with the single facet {}.
    bool is_empty_complex() const {
        return !is_void_ && facets_.size() == 1 && facets_[0].empty();
    }

    /// Dimension of the largest face; -1 for EMPTY, kVoidDim for VOID.
    static constexpr int kVoidDim = -2;
    int dim() const;

    bool is_pure() const;

    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    /// Is f in the downward closure? ({} is a face of every nonvoid complex.)
    bool has_face(const Face& f) const;

    /// Sorted list of vertex ids appearing in some face.
    std::vector<Vertex> vertex_set() const;

    bool operator==(const Complex&) const = default;

private:
    bool is_void_ = true;
    std::vector<Face> facets_;
};

/// Face-count sequence f_{-1}, f_0, ..., f_d (counts[k+1] = f_k).
/// VOID has an empty sequence; every nonvoid complex has f_{-1} = 1.
struct FVector {
    std::vector<long long> counts;

    /// f_k, zero outside the stored range (k >= -1).
    long long f(int k) const;
    /// chi = sum_{k>=0} (-1)^k f_k.
    long long euler() const;
    /// "1 10 40 60 30"
    std::string to_string() const;

    bool operator==(const FVector&) const = default;
};

// --- Core operations. All are pure functions returning fresh values. ---

/// Join {sigma cup tau}; vertex sets must be disjoint. VOID absorbs,
/// EMPTY is the identity.
Complex join(const Complex& a, const Complex& b);

/// Cone over `a` with the given apex: join(a, {{apex}}).
Complex cone(const Complex& a, Vertex apex);

/// Join of `a` with the 0-sphere {{p},{q}}.
Complex suspension(const Complex& a, Vertex p, Vertex q);

/// lk(t, a) = { sigma : sigma cap t = {} and sigma cup t in a }.
Complex link(const Complex& a, const Face& t);

/// All faces of dimension <= k (k >= -1).
Complex skeleton(const Complex& a, int k);

/// Subcomplex of `a` generated by the facets of `a` that are not facets of
/// `g`; `a` pure, `g` a pure full-dimensional subcomplex (or VOID, which
/// removes nothing). VOID if every facet is removed.
Complex facet_complement(const Complex& a, const Complex& g);

/// Complex generated by the ridges lying in exactly one facet; EMPTY when
/// there are none (closed pseudomanifold), VOID for VOID input. Requires a
/// pure input with every ridge in at most two facets.
Complex boundary(const Complex& a);

/// Image under the involution: every vertex id negated.
Complex negate(const Complex& a);

Complex union_of(const Complex& a, const Complex& b);

/// Maximal faces common to both downward closures.
Complex intersection_of(const Complex& a, const Complex& b);

/// Exact face counts of the downward closure (full enumeration).
FVector f_vector(const Complex& a);

long long euler_characteristic(const Complex& a);

/// Every facet of g is a face of a. VOID is a subcomplex of everything.
bool is_subcomplex(const Complex& g, const Complex& a);

}  // namespace csph
