#include "csph/face.hpp"

#include <algorithm>
#include <sstream>

namespace csph {

namespace {

void validate_sorted(const std::vector<Vertex>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == 0)
            throw malformed_face_error("face contains vertex id 0");
        if (i > 0 && verts[i - 1] >= verts[i])
            throw malformed_face_error("face contains a duplicate vertex id " +
                                       std::to_string(verts[i]));
    }
}

}  // namespace

Face::Face(std::initializer_list<Vertex> verts) : Face(std::vector<Vertex>(verts)) {}

Face::Face(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    validate_sorted(verts_);
}

Face Face::from_sorted(std::vector<Vertex> verts) {
    Face f;
    f.verts_ = std::move(verts);
    return f;
}

bool Face::contains(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::contains_face(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

bool Face::contains_antipodal_pair() const {
    // verts_ is sorted, so -v precedes v; binary search per negative entry.
    for (Vertex v : verts_) {
        if (v >= 0) break;
        if (contains(-v)) return true;
    }
    return false;
}

Face Face::negated() const {
    std::vector<Vertex> out(verts_.rbegin(), verts_.rend());
    for (Vertex& v : out) v = -v;
    return from_sorted(std::move(out));
}

Face Face::minus(const Face& other) const {
    std::vector<Vertex> out;
    out.reserve(verts_.size());
    std::set_difference(verts_.begin(), verts_.end(),
                        other.verts_.begin(), other.verts_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(verts_.size() - 1);
    for (Vertex w : verts_)
        if (w != v) out.push_back(w);
    return from_sorted(std::move(out));
}

Face Face::intersected(const Face& other) const {
    std::vector<Vertex> out;
    std::set_intersection(verts_.begin(), verts_.end(),
                          other.verts_.begin(), other.verts_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face disjoint_union(const Face& a, const Face& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::merge(a.verts_.begin(), a.verts_.end(),
               b.verts_.begin(), b.verts_.end(), std::back_inserter(out));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] == out[i])
            throw disjointness_error("faces share vertex " + std::to_string(out[i]));
    return Face::from_sorted(std::move(out));
}

std::string Face::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ", ";
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

}  // namespace csph
