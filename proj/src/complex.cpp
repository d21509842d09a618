#include "csph/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "csph/kernels.hpp"

namespace csph {

Complex Complex::empty_complex() {
    Complex c;
    c.is_void_ = false;
    c.facets_ = {Face{}};
    return c;
}

Complex Complex::make(std::vector<Face> facets) {
    if (facets.empty()) return void_complex();

    // Absorption: a face can only be contained in a strictly larger one, so
    // sort by size descending and keep faces not covered by an earlier keep.
    std::sort(facets.begin(), facets.end(), [](const Face& x, const Face& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    std::vector<Face> keep;
    keep.reserve(facets.size());
    for (const Face& f : facets) {
        bool covered = false;
        for (const Face& g : keep) {
            if (g.size() < f.size()) break;  // keep is size-descending too
            if (g.contains_face(f)) { covered = true; break; }
        }
        if (!covered) keep.push_back(f);
    }
    return from_maximal(std::move(keep));
}

Complex Complex::from_maximal(std::vector<Face> facets) {
    if (facets.empty()) return void_complex();
    std::sort(facets.begin(), facets.end());
    Complex c;
    c.is_void_ = false;
    c.facets_ = std::move(facets);
    return c;
}

int Complex::dim() const {
    if (is_void_) return kVoidDim;
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool Complex::is_pure() const {
    if (is_void_ || facets_.empty()) return true;
    const std::size_t s = facets_.front().size();
    for (const Face& f : facets_)
        if (f.size() != s) return false;
    return true;
}

bool Complex::has_face(const Face& f) const {
    if (is_void_) return false;
    for (const Face& g : facets_)
        if (g.contains_face(f)) return true;
    return false;
}

std::vector<Vertex> Complex::vertex_set() const {
    std::vector<Vertex> out;
    for (const Face& f : facets_)
        out.insert(out.end(), f.vertices().begin(), f.vertices().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long FVector::f(int k) const {
    const int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
    return counts[idx];
}

long long FVector::euler() const {
    long long chi = 0;
    for (std::size_t j = 1; j < counts.size(); ++j)
        chi += (j % 2 == 1) ? counts[j] : -counts[j];
    return chi;
}

std::string FVector::to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (j) os << ' ';
        os << counts[j];
    }
    return os.str();
}

namespace {

bool vertex_sets_disjoint(const Complex& a, const Complex& b) {
    const std::vector<Vertex> va = a.vertex_set();
    const std::vector<Vertex> vb = b.vertex_set();
    std::vector<Vertex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(common));
    return common.empty();
}

}  // namespace

Complex join(const Complex& a, const Complex& b) {
    if (a.is_void() || b.is_void()) return Complex::void_complex();
    if (!vertex_sets_disjoint(a, b))
        throw disjointness_error("join requires disjoint vertex sets");

    std::vector<Face> facets;
    facets.reserve(a.facet_count() * b.facet_count());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets())
            facets.push_back(disjoint_union(f, g));
    // Unions of antichains over disjoint supports are again an antichain.
    return Complex::from_maximal(std::move(facets));
}

Complex cone(const Complex& a, Vertex apex) {
    return join(a, Complex::make({Face{apex}}));
}

Complex suspension(const Complex& a, Vertex p, Vertex q) {
    if (p == q)
        throw precondition_error("suspension poles must be distinct");
    return join(a, Complex::make({Face{p}, Face{q}}));
}

Complex link(const Complex& a, const Face& t) {
    if (!a.has_face(t))
        throw not_a_face_error("link: " + t.to_string() + " is not a face");
    std::vector<Face> facets;
    for (const Face& f : a.facets())
        if (f.contains_face(t)) facets.push_back(f.minus(t));
    return Complex::from_maximal(std::move(facets));
}

namespace {

void append_subsets_of_size(const Face& f, std::size_t k, std::vector<Face>& out) {
    const std::vector<Vertex>& v = f.vertices();
    std::vector<Vertex> pick(k);
    // Iterative combination walk over positions in v.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = v[idx[i]];
        out.push_back(Face::from_sorted(pick));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == v.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Complex skeleton(const Complex& a, int k) {
    if (k < -1)
        throw precondition_error("skeleton: k must be >= -1");
    if (a.is_void()) return Complex::void_complex();
    if (k == -1) return Complex::empty_complex();

    const std::size_t cap = static_cast<std::size_t>(k) + 1;
    std::vector<Face> facets;
    for (const Face& f : a.facets()) {
        if (f.size() <= cap)
            facets.push_back(f);
        else
            append_subsets_of_size(f, cap, facets);
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return Complex::make(std::move(facets));
}

Complex facet_complement(const Complex& a, const Complex& g) {
    if (g.is_void()) {
        if (!a.is_pure())
            throw precondition_error("facet_complement: complex is not pure");
        return a;
    }
    if (a.is_void())
        throw precondition_error("facet_complement: subcomplex of the void complex");
    if (!a.is_pure() || !g.is_pure())
        throw precondition_error("facet_complement: inputs must be pure");
    if (g.dim() != a.dim())
        throw precondition_error("facet_complement: subcomplex is not full-dimensional");

    // A full-dimensional face of a pure complex is maximal, so every facet of
    // g must literally appear in a's facet list.
    for (const Face& f : g.facets())
        if (!std::binary_search(a.facets().begin(), a.facets().end(), f))
            throw precondition_error("facet_complement: " + f.to_string() +
                                     " is not a facet of the ambient complex");

    std::vector<Face> facets;
    facets.reserve(a.facet_count() - g.facet_count());
    std::set_difference(a.facets().begin(), a.facets().end(),
                        g.facets().begin(), g.facets().end(),
                        std::back_inserter(facets));
    if (facets.empty()) return Complex::void_complex();
    return Complex::from_maximal(std::move(facets));
}

Complex boundary(const Complex& a) {
    if (a.is_void()) return Complex::void_complex();
    if (a.dim() < 0)
        throw precondition_error("boundary: complex must be pure of dimension >= 0");
    if (!a.is_pure())
        throw precondition_error("boundary: complex is not pure");

    std::unordered_map<Face, int, FaceHash> ridge_count;
    ridge_count.reserve(a.facet_count() * (a.dim() + 1));
    for (const Face& f : a.facets())
        for (Vertex v : f.vertices())
            ++ridge_count[f.without(v)];

    std::vector<Face> bd;
    for (const auto& [ridge, count] : ridge_count) {
        if (count > 2)
            throw pseudomanifold_error("boundary: ridge " + ridge.to_string() +
                                       " lies in " + std::to_string(count) + " facets");
        if (count == 1) bd.push_back(ridge);
    }
    if (bd.empty()) return Complex::empty_complex();
    return Complex::from_maximal(std::move(bd));
}

Complex negate(const Complex& a) {
    if (a.is_void()) return Complex::void_complex();
    std::vector<Face> facets;
    facets.reserve(a.facet_count());
    for (const Face& f : a.facets()) facets.push_back(f.negated());
    return Complex::from_maximal(std::move(facets));
}

Complex union_of(const Complex& a, const Complex& b) {
    if (a.is_void()) return b;
    if (b.is_void()) return a;
    std::vector<Face> facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    return Complex::make(std::move(facets));
}

Complex intersection_of(const Complex& a, const Complex& b) {
    if (a.is_void() || b.is_void()) return Complex::void_complex();
    std::vector<Face> facets;
    facets.reserve(a.facet_count() * b.facet_count());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets())
            facets.push_back(f.intersected(g));
    return Complex::make(std::move(facets));
}

FVector f_vector(const Complex& a) {
    FVector fv;
    if (a.is_void()) return fv;
    const std::vector<Face> faces = kernels::enumerate_faces(a, kernels::Exec::parallel);
    fv.counts.assign(static_cast<std::size_t>(a.dim()) + 2, 0);
    for (const Face& f : faces) ++fv.counts[f.size()];
    return fv;
}

long long euler_characteristic(const Complex& a) {
    return f_vector(a).euler();
}

namespace {

// Bitmask fast path for repeated has_face queries; usable when every vertex
// id fits in +-32.
bool mask_encodable(const std::vector<Vertex>& verts) {
    return verts.empty() || (verts.front() >= -32 && verts.back() <= 32);
}

std::uint64_t face_mask(const Face& f) {
    std::uint64_t m = 0;
    for (Vertex v : f.vertices()) {
        const int bit = (std::abs(v) - 1) * 2 + (v < 0 ? 1 : 0);
        m |= 1ull << bit;
    }
    return m;
}

}  // namespace

bool is_subcomplex(const Complex& g, const Complex& a) {
    if (g.is_void()) return true;
    if (a.is_void()) return false;

    if (mask_encodable(g.vertex_set()) && mask_encodable(a.vertex_set())) {
        std::vector<std::uint64_t> amasks;
        amasks.reserve(a.facet_count());
        for (const Face& f : a.facets()) amasks.push_back(face_mask(f));
        for (const Face& f : g.facets()) {
            const std::uint64_t m = face_mask(f);
            bool found = false;
            for (std::uint64_t am : amasks)
                if ((m & am) == m) { found = true; break; }
            if (!found) return false;
        }
        return true;
    }

    for (const Face& f : g.facets())
        if (!a.has_face(f)) return false;
    return true;
}

}  // namespace csph
