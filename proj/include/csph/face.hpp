#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "csph/errors.hpp"

namespace csph {

/// A vertex of the ambient vertex set V_n. Nonzero integer id; +i and -i are
/// antipodes, and id negation is the free involution.
using Vertex = int;

/// A face: a finite vertex set stored in strictly increasing id order, so
/// that set equality coincides with representation equality. The empty face
/// (the paper's emptyset) is Face{}.
class Face {
public:
    Face() = default;
    Face(std::initializer_list<Vertex> verts);
    explicit Face(std::vector<Vertex> verts);

    /// Trusts that `verts` is already strictly increasing and nonzero.
    static Face from_sorted(std::vector<Vertex> verts);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    const std::vector<Vertex>& vertices() const { return verts_; }

    bool contains(Vertex v) const;
    /// Superset test: does this face contain every vertex of `other`?
    bool contains_face(const Face& other) const;
    bool contains_antipodal_pair() const;

    /// The antipodal face -F.
    Face negated() const;
    /// Set difference this \ other.
    Face minus(const Face& other) const;
    /// This face with one vertex removed (vertex must be present).
    Face without(Vertex v) const;
    /// Set intersection.
    Face intersected(const Face& other) const;

    /// Union of faces with disjoint supports; throws disjointness_error on
    /// a shared vertex.
    friend Face disjoint_union(const Face& a, const Face& b);

    auto operator<=>(const Face&) const = default;

    /// "{-2, 1, 3}" for diagnostics and witnesses.
    std::string to_string() const;

private:
    std::vector<Vertex> verts_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Vertex v : f.vertices())
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned int>(v))) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace csph
