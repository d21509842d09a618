#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csph/complex.hpp"
#include "csph/construction.hpp"
#include "csph/kernels.hpp"

namespace csph {

/// One executed check: claim id, outcome, witnesses on failure.
struct CheckResult {
    std::string claim;
    bool pass = false;
    std::vector<Face> witnesses;  // missing face, bad ridge, shared facet, ...
    std::string note;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t fail_count() const;
    void append(CheckResult r) { checks.push_back(std::move(r)); }
    void append_all(VerificationReport other, const std::string& prefix = "");
    void print(std::ostream& os, bool failures_only = false) const;
};

/// GF(2) homology ranks b_0..b_d, with the reduced ranks alongside.
struct BettiVectorZ2 {
    std::vector<int> betti;
    std::vector<int> reduced;

    bool operator==(const BettiVectorZ2&) const = default;
    std::string to_string() const;
};

struct SurrogateConfig {
    /// How many levels of vertex links to re-check recursively.
    int link_depth = 1;
    kernels::Exec exec = kernels::Exec::parallel;
    kernels::Budget budget;
};

// --- Definition-level checks ---

/// Does vertex negation induce a free involution on the nonempty faces:
/// -F is a face for every facet F, and no face contains an antipodal pair.
bool check_free_involution(const Complex& a);
/// A facet violating either condition, if any.
std::optional<Face> free_involution_witness(const Complex& a);

/// Is every subset of V_n of size <= i without an antipodal pair a face of
/// `a`? Vacuously true for i = 0 on nonvoid complexes.
bool check_cs_neighborly(const Complex& a, int i, int n,
                         kernels::Exec exec = kernels::Exec::parallel,
                         const kernels::Budget& budget = {});

/// skel_{d-i-1}(b) == skel_{d-i-1}(boundary(b)); meaningful for balls.
bool check_stacked(const Complex& b, int i);

/// Pure, every ridge in exactly two facets, facet adjacency connected.
bool is_closed_pseudomanifold(const Complex& a);

BettiVectorZ2 homology_z2(const Complex& a,
                          kernels::Exec exec = kernels::Exec::parallel,
                          const kernels::Budget& budget = {});

/// The unreduced GF(2) sphere pattern in dimension d (d >= 0).
BettiVectorZ2 sphere_betti(int d);
/// The contractible pattern (1, 0, ..., 0) in dimension d.
BettiVectorZ2 ball_betti(int d);

/// Computable consequences of being a combinatorial d-sphere: closed
/// pseudomanifold, Euler characteristic 1+(-1)^d, GF(2) sphere homology,
/// and recursively checked vertex links down to cfg.link_depth.
VerificationReport sphere_surrogate_check(const Complex& a, int d,
                                          const SurrogateConfig& cfg = {});

/// Searches every unordered vertex pair {p,q} for a suspension structure:
/// each facet contains exactly one pole, the two links agree, and the two
/// cones over the common link recover the complex.
std::optional<std::pair<Vertex, Vertex>> detect_suspension(const Complex& a);

/// lk(v_n v_{n+1}, delta(2k-1, n+1)) and lk(v_n v_{n+1} v_{n+2},
/// delta(2k, n+2)) both compared against delta(2k-3, n-1).
VerificationReport check_link_identities(Builder& builder, int k, int n,
                                         const SurrogateConfig& cfg = {});

/// Strict-mode boundary: classifies every face as interior or boundary by
/// the homology of its link. Restricted to dim <= 4; used to cross-check
/// the ridge-count boundary().
Complex boundary_via_links(const Complex& a,
                           kernels::Exec exec = kernels::Exec::parallel);

/// Faces of b that are not faces of boundary(b), sorted.
std::vector<Face> interior_faces(const Complex& b,
                                 kernels::Exec exec = kernels::Exec::parallel);

// --- The claim-suite runner ---

enum class SuiteKind { basic, full };

/// Audits the construction on the grid d <= d_max, d+1 <= n <= d+1+n_slack:
/// the main theorem, every ball clause, the boundary/inclusion lemmas, the
/// neighborly variants, and the section-4 propositions. `basic` restricts
/// to the theorem and ball clauses. Cells are evaluated in parallel; the
/// report order is deterministic.
VerificationReport run_paper_suite(Builder& builder, int d_max, int n_slack,
                                   SuiteKind kind = SuiteKind::full,
                                   const SurrogateConfig& cfg = {});

}  // namespace csph
