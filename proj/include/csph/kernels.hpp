#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csph/complex.hpp"

namespace csph::kernels {

/// Execution mode for the parallel kernels. `parallel` uses OpenMP when the
/// problem is large enough to pay for it; `serial` forces single-threaded
/// execution. Results are identical either way.
enum class Exec { serial, parallel };

/// Work guards for the enumeration-heavy checks. A request whose estimated
/// size exceeds a guard raises resource_error instead of running.
struct Budget {
    long long max_subsets = 20'000'000;  // neighborliness scan entries
    long long max_faces = 5'000'000;     // downward-closure size (homology)
};

// --- Downward-closure enumeration ---

/// Every face of the closure (including {} for nonvoid complexes), sorted
/// lexicographically.
std::vector<Face> enumerate_faces(const Complex& a, Exec exec);

/// Faces of dimension <= k only, same ordering.
std::vector<Face> enumerate_faces_up_to(const Complex& a, int k, Exec exec);

/// Plain single-threaded set-based enumeration, kept as the reference the
/// parallel kernel is tested against.
std::vector<Face> enumerate_faces_reference(const Complex& a);

// --- GF(2) linear algebra ---

/// Dense bit-packed matrix over GF(2), row-major, 64 columns per word.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_; }

    void set(int r, int c) { bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] |= 1ull << (c & 63); }
    bool get(int r, int c) const { return (bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u; }

    std::uint64_t* row(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }

    void swap_rows(int r1, int r2);

private:
    int rows_;
    int cols_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Matrix rank over GF(2) by row elimination. Takes a copy; the parallel
/// mode distributes the row updates of each pivot step.
int gf2_rank(BitMatrix m, Exec exec);

/// Byte-per-entry reference elimination used to validate the packed kernel.
int gf2_rank_reference(std::vector<std::vector<std::uint8_t>> m);

// --- cs-neighborliness scan ---

/// Scans all subsets of V_n = {+-1..+-n} of size <= i that contain no
/// antipodal pair, in deterministic order (size ascending, then pair-index
/// combinations lexicographically, then sign patterns with + before -),
/// and returns the first one that is not a face of `a`; nullopt when every
/// such subset is a face. The parallel mode splits the scan per size and
/// reduces to the smallest enumeration index, so the witness matches the
/// serial order.
std::optional<Face> find_missing_cs_face(const Complex& a, int i, int n,
                                         Exec exec, const Budget& budget = {});

/// Nested-loop reference with facet-scan membership, no precomputed closure.
std::optional<Face> find_missing_cs_face_reference(const Complex& a, int i, int n);

}  // namespace csph::kernels
