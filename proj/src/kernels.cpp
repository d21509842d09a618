#include "csph/kernels.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csph::kernels {

namespace {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Saturating binomial coefficient; anything past the guard range just needs
// to compare as "too big".
long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int j = 1; j <= k; ++j) {
        if (r > (LLONG_MAX / 4) / (n - k + j)) return LLONG_MAX / 4;
        r = r * (n - k + j) / j;
    }
    return r;
}

void append_all_subsets(const Face& facet, int max_size, std::vector<Face>& out) {
    const std::vector<Vertex>& v = facet.vertices();
    const int s = static_cast<int>(v.size());
    const unsigned long long top = 1ull << s;
    std::vector<Vertex> pick;
    pick.reserve(s);
    for (unsigned long long m = 0; m < top; ++m) {
        if (max_size >= 0 && __builtin_popcountll(m) > max_size) continue;
        pick.clear();
        for (int j = 0; j < s; ++j)
            if (m & (1ull << j)) pick.push_back(v[j]);
        out.push_back(Face::from_sorted(pick));
    }
}

std::vector<Face> enumerate_impl(const Complex& a, int max_size, Exec exec) {
    if (a.is_void()) return {};
    const auto& facets = a.facets();
    const int nf = static_cast<int>(facets.size());

    std::unordered_set<Face, FaceHash> seen;

    const bool par = exec == Exec::parallel && nf > 32 && max_threads() > 1;
    if (par) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::unordered_set<Face, FaceHash> local;
            std::vector<Face> buf;
#pragma omp for schedule(dynamic, 8) nowait
            for (int i = 0; i < nf; ++i) {
                buf.clear();
                append_all_subsets(facets[i], max_size, buf);
                local.insert(buf.begin(), buf.end());
            }
#pragma omp critical(csph_enum_merge)
            seen.merge(local);
        }
#endif
    } else {
        std::vector<Face> buf;
        for (int i = 0; i < nf; ++i) {
            buf.clear();
            append_all_subsets(facets[i], max_size, buf);
            seen.insert(buf.begin(), buf.end());
        }
    }

    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Face> enumerate_faces(const Complex& a, Exec exec) {
    return enumerate_impl(a, -1, exec);
}

std::vector<Face> enumerate_faces_up_to(const Complex& a, int k, Exec exec) {
    if (k < -1) return {};
    return enumerate_impl(a, k + 1, exec);
}

std::vector<Face> enumerate_faces_reference(const Complex& a) {
    if (a.is_void()) return {};
    std::set<Face> seen;
    std::vector<Face> buf;
    for (const Face& f : a.facets()) {
        buf.clear();
        append_all_subsets(f, -1, buf);
        seen.insert(buf.begin(), buf.end());
    }
    return {seen.begin(), seen.end()};
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * std::max(words_, 1), 0) {
    if (words_ == 0) words_ = 1;
}

void BitMatrix::swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    std::swap_ranges(row(r1), row(r1) + words_, row(r2));
}

int gf2_rank(BitMatrix m, Exec exec) {
    const int rows = m.rows();
    const int cols = m.cols();
    const int words = m.words_per_row();
    int rank = 0;

    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m.get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        m.swap_rows(rank, pivot);

        const std::uint64_t* prow = m.row(rank);
        const bool par = exec == Exec::parallel &&
                         static_cast<long long>(rows - rank) * words > 1 << 15;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (int r = rank + 1; r < rows; ++r) {
            if (m.get(r, c)) {
                std::uint64_t* rr = m.row(r);
                for (int w = 0; w < words; ++w) rr[w] ^= prow[w];
            }
        }
        ++rank;
    }
    return rank;
}

int gf2_rank_reference(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r)
            if (m[r][c])
                for (int w = 0; w < cols; ++w) m[r][w] ^= m[rank][w];
        ++rank;
    }
    return rank;
}

namespace {

// Lexicographic unranking of a size-s combination of {1..n}.
void unrank_combination(long long rank, int n, int s, std::vector<int>& out) {
    out.resize(s);
    int x = 1;
    for (int j = 0; j < s; ++j) {
        while (binom(n - x, s - j - 1) <= rank) {
            rank -= binom(n - x, s - j - 1);
            ++x;
        }
        out[j] = x;
        ++x;
    }
}

Face face_from_indices(const std::vector<int>& pairs, unsigned long long signs) {
    std::vector<Vertex> verts(pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j)
        verts[j] = (signs >> j) & 1 ? -pairs[j] : pairs[j];
    std::sort(verts.begin(), verts.end());
    return Face::from_sorted(std::move(verts));
}

}  // namespace

std::optional<Face> find_missing_cs_face(const Complex& a, int i, int n,
                                         Exec exec, const Budget& budget) {
    if (i < 0) return std::nullopt;
    if (a.is_void()) return Face{};

    const std::vector<Vertex> verts = a.vertex_set();
    if (!verts.empty() && (verts.front() < -n || verts.back() > n))
        throw precondition_error("cs-neighborliness: vertex ids exceed the ambient V_n");

    const int cap = std::min(i, n);
    long long total = 0;
    for (int s = 0; s <= cap; ++s) {
        const long long combs = binom(n, s);
        if (combs > budget.max_subsets >> s) {
            total = LLONG_MAX / 2;
            break;
        }
        total += combs << s;
    }
    if (total > budget.max_subsets)
        throw resource_error("cs-neighborliness scan of " + std::to_string(total) +
                             " subsets exceeds the enumeration budget");

    // Faces of size <= cap, hashed for O(1) membership inside the scan.
    const std::vector<Face> small = enumerate_faces_up_to(a, cap - 1, exec);
    const std::unordered_set<Face, FaceHash> faces(small.begin(), small.end());

    for (int s = 0; s <= cap; ++s) {
        if (s == 0) continue;  // {} is a face of every nonvoid complex
        const long long count = binom(n, s) << s;
        long long found = LLONG_MAX;

        const bool par = exec == Exec::parallel && count > 4096 && max_threads() > 1;
        if (par) {
#ifdef _OPENMP
#pragma omp parallel
            {
                std::vector<int> pairs;
                long long local = LLONG_MAX;
#pragma omp for schedule(static)
                for (long long idx = 0; idx < count; ++idx) {
                    unrank_combination(idx >> s, n, s, pairs);
                    if (!faces.count(face_from_indices(pairs, idx & ((1ull << s) - 1))))
                        local = std::min(local, idx);
                }
#pragma omp critical(csph_scan_min)
                found = std::min(found, local);
            }
#endif
        } else {
            std::vector<int> pairs;
            for (long long idx = 0; idx < count; ++idx) {
                unrank_combination(idx >> s, n, s, pairs);
                if (!faces.count(face_from_indices(pairs, idx & ((1ull << s) - 1)))) {
                    found = idx;
                    break;
                }
            }
        }

        if (found != LLONG_MAX) {
            std::vector<int> pairs;
            unrank_combination(found >> s, n, s, pairs);
            return face_from_indices(pairs, found & ((1ull << s) - 1));
        }
    }
    return std::nullopt;
}

std::optional<Face> find_missing_cs_face_reference(const Complex& a, int i, int n) {
    if (i < 0) return std::nullopt;
    if (a.is_void()) return Face{};

    const int cap = std::min(i, n);
    std::vector<int> pairs;
    for (int s = 1; s <= cap; ++s) {
        const long long count = binom(n, s) << s;
        for (long long idx = 0; idx < count; ++idx) {
            unrank_combination(idx >> s, n, s, pairs);
            const Face f = face_from_indices(pairs, idx & ((1ull << s) - 1));
            if (!a.has_face(f)) return f;
        }
    }
    return std::nullopt;
}

}  // namespace csph::kernels
