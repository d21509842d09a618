#include "csph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csph {

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::size_t VerificationReport::fail_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return !c.pass; }));
}

void VerificationReport::append_all(VerificationReport other, const std::string& prefix) {
    for (CheckResult& c : other.checks) {
        c.claim = prefix + c.claim;
        checks.push_back(std::move(c));
    }
}

void VerificationReport::print(std::ostream& os, bool failures_only) const {
    for (const CheckResult& c : checks) {
        if (failures_only && c.pass) continue;
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim;
        os << " (" << c.elapsed_ms << " ms)";
        os << '\n';
        if (!c.pass) {
            for (const Face& w : c.witnesses)
                os << "       witness: " << w.to_string() << '\n';
            if (!c.note.empty()) os << "       " << c.note << '\n';
        }
    }
    os << checks.size() - fail_count() << "/" << checks.size() << " checks passed\n";
}

std::string BettiVectorZ2::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) os << ',';
        os << betti[i];
    }
    os << ')';
    return os.str();
}

// --- free involution ---

std::optional<Face> free_involution_witness(const Complex& a) {
    if (a.is_void()) return std::nullopt;
    for (const Face& f : a.facets()) {
        if (f.contains_antipodal_pair()) return f;
        if (!f.empty() && !a.has_face(f.negated())) return f;
    }
    return std::nullopt;
}

bool check_free_involution(const Complex& a) {
    return !free_involution_witness(a).has_value();
}

// --- neighborliness / stackedness ---

bool check_cs_neighborly(const Complex& a, int i, int n,
                         kernels::Exec exec, const kernels::Budget& budget) {
    if (i <= 0) return !a.is_void() || i < 0;
    return !kernels::find_missing_cs_face(a, i, n, exec, budget).has_value();
}

bool check_stacked(const Complex& b, int i) {
    if (b.is_void() || b.dim() < 0)
        throw precondition_error("check_stacked: input must be pure of dimension >= 0");
    if (!b.is_pure())
        throw precondition_error("check_stacked: input is not pure");
    const int d = b.dim();
    const int k = std::max(d - i - 1, -1);
    return skeleton(b, k) == skeleton(boundary(b), k);
}

// --- pseudomanifold ---

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct PmDetails {
    bool every_ridge_in_two = true;
    bool connected = true;
    std::optional<Face> bad_ridge;
    int bad_count = 0;
};

PmDetails pm_details(const Complex& a) {
    PmDetails out;
    std::unordered_map<Face, std::pair<int, int>, FaceHash> ridge_first_count;
    const auto& facets = a.facets();
    UnionFind uf(static_cast<int>(facets.size()));
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
        for (Vertex v : facets[fi].vertices()) {
            auto [it, fresh] = ridge_first_count.try_emplace(facets[fi].without(v), fi, 0);
            ++it->second.second;
            if (!fresh) uf.unite(fi, it->second.first);
        }
    }
    for (const auto& [ridge, fc] : ridge_first_count) {
        if (fc.second != 2) {
            out.every_ridge_in_two = false;
            if (!out.bad_ridge || ridge < *out.bad_ridge) {
                out.bad_ridge = ridge;
                out.bad_count = fc.second;
            }
        }
    }
    const int root = facets.empty() ? 0 : uf.find(0);
    for (int fi = 1; fi < static_cast<int>(facets.size()); ++fi)
        if (uf.find(fi) != root) { out.connected = false; break; }
    return out;
}

}  // namespace

bool is_closed_pseudomanifold(const Complex& a) {
    if (a.is_void() || a.dim() < 0 || !a.is_pure()) return false;
    const PmDetails d = pm_details(a);
    return d.every_ridge_in_two && d.connected;
}

// --- GF(2) homology ---

BettiVectorZ2 homology_z2(const Complex& a, kernels::Exec exec,
                          const kernels::Budget& budget) {
    if (a.is_void())
        throw precondition_error("homology_z2: void complex");
    BettiVectorZ2 out;
    const int d = a.dim();
    if (d < 0) return out;  // the empty complex has no faces of dimension >= 0

    long long bound = 0;
    for (const Face& f : a.facets()) {
        bound += f.size() < 62 ? (1ll << f.size()) : LLONG_MAX / 4;
        if (bound > budget.max_faces)
            throw resource_error("homology_z2: closure bound exceeds the face budget");
    }

    const std::vector<Face> faces = kernels::enumerate_faces(a, exec);
    std::vector<std::unordered_map<Face, int, FaceHash>> index(d + 1);
    std::vector<int> count(d + 2, 0);
    for (const Face& f : faces) {
        if (f.empty()) continue;
        index[f.dim()].emplace(f, count[f.dim()]++);
    }

    std::vector<int> rank(d + 2, 0);  // rank[k] = rank of the k-th boundary map
    for (int k = 1; k <= d; ++k) {
        if (count[k] == 0 || count[k - 1] == 0) continue;
        kernels::BitMatrix m(count[k - 1], count[k]);
        for (const auto& [face, col] : index[k])
            for (Vertex v : face.vertices())
                m.set(index[k - 1].at(face.without(v)), col);
        rank[k] = kernels::gf2_rank(std::move(m), exec);
    }

    out.betti.resize(d + 1);
    for (int k = 0; k <= d; ++k)
        out.betti[k] = count[k] - rank[k] - rank[k + 1];
    out.reduced = out.betti;
    if (count[0] > 0) --out.reduced[0];
    return out;
}

BettiVectorZ2 sphere_betti(int d) {
    BettiVectorZ2 out;
    out.betti.assign(d + 1, 0);
    out.reduced.assign(d + 1, 0);
    if (d == 0) {
        out.betti[0] = 2;
        out.reduced[0] = 1;
        return out;
    }
    out.betti[0] = 1;
    out.betti[d] = 1;
    out.reduced[d] = 1;
    return out;
}

BettiVectorZ2 ball_betti(int d) {
    BettiVectorZ2 out;
    out.betti.assign(d + 1, 0);
    out.reduced.assign(d + 1, 0);
    out.betti[0] = 1;
    return out;
}

// --- the sphere surrogate ---

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one check body, folding thrown library errors into a failed result.
// resource_error is not folded: a refused computation is not a disproof, so
// it propagates to the caller (the suite runner re-raises it after the
// parallel region drains).
template <typename Body>
CheckResult timed_check(std::string claim, Body&& body) {
    CheckResult r;
    r.claim = std::move(claim);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const resource_error&) {
        throw;
    } catch (const error& e) {
        r.pass = false;
        r.note = std::string("error: ") + e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace

VerificationReport sphere_surrogate_check(const Complex& a, int d,
                                          const SurrogateConfig& cfg) {
    VerificationReport rep;

    if (a.is_void() || !a.is_pure() || a.dim() != d) {
        rep.append(timed_check("pure-dim", [&](CheckResult& r) {
            r.pass = false;
            r.note = a.is_void() ? "void complex"
                                 : "expected pure of dimension " + std::to_string(d) +
                                       ", got dimension " + std::to_string(a.dim());
        }));
        return rep;
    }
    rep.append(timed_check("pure-dim", [](CheckResult& r) { r.pass = true; }));

    rep.append(timed_check("closed-pseudomanifold", [&](CheckResult& r) {
        const PmDetails pm = pm_details(a);
        r.pass = pm.every_ridge_in_two && pm.connected;
        if (!pm.every_ridge_in_two && pm.bad_ridge) {
            r.witnesses.push_back(*pm.bad_ridge);
            r.note = "ridge lies in " + std::to_string(pm.bad_count) + " facets";
        } else if (!pm.connected) {
            r.note = "facet adjacency graph is disconnected";
        }
    }));

    rep.append(timed_check("euler", [&](CheckResult& r) {
        const long long chi = euler_characteristic(a);
        const long long want = 1 + (d % 2 == 0 ? 1 : -1);
        r.pass = chi == want;
        if (!r.pass)
            r.note = "chi = " + std::to_string(chi) + ", expected " + std::to_string(want);
    }));

    rep.append(timed_check("homology", [&](CheckResult& r) {
        const BettiVectorZ2 h = homology_z2(a, cfg.exec, cfg.budget);
        r.pass = h == sphere_betti(d);
        if (!r.pass) r.note = "betti = " + h.to_string();
    }));

    if (cfg.link_depth > 0 && d >= 1) {
        SurrogateConfig sub = cfg;
        sub.link_depth = cfg.link_depth - 1;
        for (Vertex v : a.vertex_set()) {
            VerificationReport lr = sphere_surrogate_check(link(a, Face{v}), d - 1, sub);
            rep.append_all(std::move(lr), "link({" + std::to_string(v) + "}).");
        }
    }
    return rep;
}

// --- suspension detection ---

std::optional<std::pair<Vertex, Vertex>> detect_suspension(const Complex& a) {
    if (a.is_void()) return std::nullopt;
    const std::vector<Vertex> verts = a.vertex_set();
    for (std::size_t pi = 0; pi < verts.size(); ++pi) {
        for (std::size_t qi = pi + 1; qi < verts.size(); ++qi) {
            const Vertex p = verts[pi], q = verts[qi];
            bool split = true;
            for (const Face& f : a.facets()) {
                if (f.contains(p) == f.contains(q)) { split = false; break; }
            }
            if (!split) continue;
            const Complex lp = link(a, Face{p});
            if (lp != link(a, Face{q})) continue;
            if (union_of(cone(lp, p), cone(lp, q)) == a) return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

// --- section-4 link identities ---

VerificationReport check_link_identities(Builder& builder, int k, int n,
                                         const SurrogateConfig& cfg) {
    (void)cfg;
    if (k < 2 || n < 2 * k - 1)
        throw domain_error("check_link_identities: need k >= 2 and n >= 2k-1");
    VerificationReport rep;
    const std::string suffix = "[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]";
    const Complex& expected = builder.delta(2 * k - 3, n - 1);

    rep.append(timed_check("link-identity.edge" + suffix, [&](CheckResult& r) {
        const Complex got = link(builder.delta(2 * k - 1, n + 1), Face{n, n + 1});
        r.pass = got == expected;
        if (!r.pass) r.note = "lk(v_n v_{n+1}) differs from delta(2k-3, n-1)";
    }));
    rep.append(timed_check("link-identity.triangle" + suffix, [&](CheckResult& r) {
        const Complex got = link(builder.delta(2 * k, n + 2), Face{n, n + 1, n + 2});
        r.pass = got == expected;
        if (!r.pass) r.note = "lk(v_n v_{n+1} v_{n+2}) differs from delta(2k-3, n-1)";
    }));
    return rep;
}

// --- strict-mode boundary ---

namespace {

bool link_is_sphere_like(const Complex& lk, int dl, kernels::Exec exec) {
    if (dl == -1) return lk.is_empty_complex();
    if (lk.is_void() || lk.dim() != dl || !lk.is_pure()) return false;
    if (!is_closed_pseudomanifold(lk)) return false;
    return homology_z2(lk, exec) == sphere_betti(dl);
}

}  // namespace

Complex boundary_via_links(const Complex& a, kernels::Exec exec) {
    if (a.is_void()) return Complex::void_complex();
    const int d = a.dim();
    if (d < 0 || !a.is_pure())
        throw precondition_error("boundary_via_links: input must be pure of dimension >= 0");
    if (d > 4)
        throw precondition_error("boundary_via_links: strict mode is capped at dimension 4");

    std::vector<Face> bd;
    for (const Face& f : kernels::enumerate_faces(a, exec)) {
        if (f.empty()) continue;
        if (!link_is_sphere_like(link(a, f), d - static_cast<int>(f.size()), exec))
            bd.push_back(f);
    }
    if (bd.empty()) return Complex::empty_complex();
    return Complex::make(std::move(bd));
}

std::vector<Face> interior_faces(const Complex& b, kernels::Exec exec) {
    if (b.is_void()) return {};
    const std::vector<Face> all = kernels::enumerate_faces(b, exec);
    const Complex bd = boundary(b);
    std::vector<Face> bd_faces;
    if (!bd.is_void()) bd_faces = kernels::enumerate_faces(bd, exec);
    std::vector<Face> out;
    std::set_difference(all.begin(), all.end(), bd_faces.begin(), bd_faces.end(),
                        std::back_inserter(out));
    return out;
}

// --- the claim suite ---

namespace {

struct Cell {
    std::string claim;
    int weight = 0;  // larger runs earlier under dynamic scheduling
    std::function<void(CheckResult&)> body;
};

std::string tag(int d, int n) {
    return "[d=" + std::to_string(d) + ",n=" + std::to_string(n) + "]";
}

std::string tag(int d, int i, int n) {
    return "[d=" + std::to_string(d) + ",i=" + std::to_string(i) + ",n=" + std::to_string(n) + "]";
}

std::optional<Face> subcomplex_witness(const Complex& g, const Complex& a) {
    for (const Face& f : g.facets())
        if (!a.has_face(f)) return f;
    return std::nullopt;
}

std::vector<Face> shared_facets(const Complex& a, const Complex& b) {
    std::vector<Face> out;
    std::set_intersection(a.facets().begin(), a.facets().end(),
                          b.facets().begin(), b.facets().end(), std::back_inserter(out));
    return out;
}

// The Lemma "partial B" right-hand side.
Complex partial_b_rhs(Builder& bld, int d, int i, int n) {
    const Complex upper = cone(boundary(bld.ball(d - 1, i, n - 1)), n);
    const Complex lower = cone(boundary(negate(bld.ball(d - 1, i - 1, n - 1))), -n);
    const Complex rest = facet_complement(bld.ball(d - 1, i, n - 1),
                                          negate(bld.ball(d - 1, i - 1, n - 1)));
    return union_of(upper, union_of(lower, rest));
}

}  // namespace

VerificationReport run_paper_suite(Builder& builder, int d_max, int n_slack,
                                   SuiteKind kind, const SurrogateConfig& cfg) {
    if (d_max < 1 || n_slack < 0)
        throw domain_error("run_paper_suite: need d_max >= 1 and n_slack >= 0");

    std::vector<Cell> cells;
    auto add = [&cells](std::string claim, int weight, std::function<void(CheckResult&)> body) {
        cells.push_back({std::move(claim), weight, std::move(body)});
    };
    Builder* bld = &builder;
    const kernels::Exec exec = cfg.exec;
    const kernels::Budget budget = cfg.budget;

    for (int d = 1; d <= d_max; ++d) {
        for (int n = d + 1; n <= d + 1 + n_slack; ++n) {
            const int top = ceil_half(d);
            const int heavy = d * 100 + n;

            add("thm.free-involution" + tag(d, n), 1, [=](CheckResult& r) {
                const auto w = free_involution_witness(bld->delta(d, n));
                r.pass = !w.has_value();
                if (w) r.witnesses.push_back(*w);
            });
            add("thm.cs-neighborly" + tag(d, top, n), heavy, [=](CheckResult& r) {
                const auto missing =
                    kernels::find_missing_cs_face(bld->delta(d, n), top, n, exec, budget);
                r.pass = !missing.has_value();
                if (missing) r.witnesses.push_back(*missing);
            });
            if (n > d + 1) {
                add("thm.neighborliness-maximal" + tag(d, top + 1, n), heavy, [=](CheckResult& r) {
                    r.pass = !check_cs_neighborly(bld->delta(d, n), top + 1, n, exec, budget);
                    if (!r.pass) r.note = "unexpectedly cs-" + std::to_string(top + 1) + "-neighborly";
                });
            }
            add("thm.sphere-surrogate" + tag(d, n), 10 * heavy, [=](CheckResult& r) {
                const VerificationReport sub = sphere_surrogate_check(bld->delta(d, n), d, cfg);
                r.pass = sub.all_pass();
                if (!r.pass) {
                    for (const CheckResult& c : sub.checks)
                        if (!c.pass) { r.note = c.claim + ": " + c.note; break; }
                }
            });

            for (int i = 0; i <= top; ++i) {
                add("ball.homology" + tag(d, i, n), heavy, [=](CheckResult& r) {
                    const BettiVectorZ2 h = homology_z2(bld->ball(d, i, n), exec, budget);
                    r.pass = h == ball_betti(d);
                    if (!r.pass) r.note = "betti = " + h.to_string();
                });
                add("ball.cs-neighborly" + tag(d, i, n), heavy, [=](CheckResult& r) {
                    const auto missing =
                        kernels::find_missing_cs_face(bld->ball(d, i, n), i, n, exec, budget);
                    r.pass = !missing.has_value();
                    if (missing) r.witnesses.push_back(*missing);
                });
                add("ball.stacked" + tag(d, i, n), heavy, [=](CheckResult& r) {
                    r.pass = check_stacked(bld->ball(d, i, n), i);
                    if (!r.pass) r.note = "a face of dimension < d-i is interior";
                });
                add("ball.nesting" + tag(d, i, n), 1, [=](CheckResult& r) {
                    const auto w = subcomplex_witness(negate(bld->ball(d, i - 1, n)),
                                                      bld->ball(d, i, n));
                    r.pass = !w.has_value();
                    if (w) r.witnesses.push_back(*w);
                });
                add("ball.cone-boundary" + tag(d, i, n), 1, [=](CheckResult& r) {
                    const Complex bd = boundary(bld->ball(d, i, n));
                    r.pass = boundary(cone(bd, n + 1)) == bd;
                });
                add("ball.antipode-free-faces" + tag(d, i, n), 1, [=](CheckResult& r) {
                    r.pass = true;
                    for (const Face& f : bld->ball(d, i, n).facets())
                        if (f.contains_antipodal_pair()) {
                            r.pass = false;
                            r.witnesses.push_back(f);
                            break;
                        }
                });
                if (i <= floor_half(d)) {
                    add("ball.antipode-disjoint-facets" + tag(d, i, n), 1, [=](CheckResult& r) {
                        const Complex& b = bld->ball(d, i, n);
                        const auto shared = shared_facets(b, negate(b));
                        r.pass = shared.empty();
                        if (!shared.empty()) r.witnesses.push_back(shared.front());
                    });
                    add("ball.last-pair-cover" + tag(d, i, n), 1, [=](CheckResult& r) {
                        r.pass = true;
                        for (const Face& f : bld->ball(d, i, n).facets())
                            if (!f.contains(n) && !f.contains(-n)) {
                                r.pass = false;
                                r.witnesses.push_back(f);
                                break;
                            }
                    });
                }
                if (i <= top - 1) {
                    add("ball.inside-sphere" + tag(d, i, n), 1, [=](CheckResult& r) {
                        const auto w = subcomplex_witness(bld->ball(d, i, n), bld->delta(d, n));
                        r.pass = !w.has_value();
                        if (w) r.witnesses.push_back(*w);
                    });
                }
                if (kind == SuiteKind::full && i <= top - 1) {
                    add("ball.not-next-neighborly" + tag(d, i, n), heavy, [=](CheckResult& r) {
                        r.pass = !check_cs_neighborly(bld->ball(d, i, n), i + 1, n, exec, budget);
                        if (!r.pass)
                            r.note = "unexpectedly cs-" + std::to_string(i + 1) + "-neighborly";
                    });
                }
                if (kind == SuiteKind::full && i <= floor_half(d)) {
                    add("lemma.interior-disjoint" + tag(d, i, n), heavy, [=](CheckResult& r) {
                        // Lemma 2.1(3) contrapositive: no shared facet, so no
                        // shared interior face either.
                        const Complex& b = bld->ball(d, i, n);
                        const Complex nb = negate(b);
                        if (!shared_facets(b, nb).empty()) {
                            r.pass = true;  // lemma imposes nothing
                            return;
                        }
                        const std::vector<Face> ia = interior_faces(b, exec);
                        const std::vector<Face> ib = interior_faces(nb, exec);
                        std::vector<Face> common;
                        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                              std::back_inserter(common));
                        r.pass = common.empty();
                        if (!common.empty()) r.witnesses.push_back(common.front());
                    });
                }
            }

            if (kind == SuiteKind::basic) continue;

            if (d >= 2) {
                for (int i = 0; i <= floor_half(d); ++i) {
                    add("lemma.partial-B" + tag(d, i, n), 1, [=](CheckResult& r) {
                        r.pass = boundary(bld->ball(d, i, n)) == partial_b_rhs(*bld, d, i, n);
                        if (!r.pass) r.note = "three-term boundary formula differs";
                    });
                    for (int j = i; j <= floor_half(d); ++j) {
                        add("lemma.inclusion[d=" + std::to_string(d) + ",i=" + std::to_string(i) +
                                ",j=" + std::to_string(j) + ",n=" + std::to_string(n) + "]",
                            1, [=](CheckResult& r) {
                                const auto w = subcomplex_witness(
                                    bld->ball(d - 1, i, n), boundary(bld->ball(d, j, n)));
                                r.pass = !w.has_value();
                                if (w) r.witnesses.push_back(*w);
                            });
                    }
                }
                add("cor.b-subcomplex" + tag(d, n + 1), 1, [=](CheckResult& r) {
                    const Complex& next = bld->ball(d, top - 1, n + 1);
                    const Complex& prev = bld->ball(d, top - 1, n);
                    const Complex shell =
                        union_of(cone(boundary(prev), n + 1),
                                 cone(boundary(negate(prev)), -(n + 1)));
                    r.pass = is_subcomplex(next, shell) &&
                             is_subcomplex(next, bld->delta(d, n + 1));
                    if (!r.pass) {
                        const auto w = subcomplex_witness(next, bld->delta(d, n + 1));
                        if (w) r.witnesses.push_back(*w);
                    }
                });
                add("variant.top-identity" + tag(d, n + 1), 1, [=](CheckResult& r) {
                    r.pass = bld->delta_variant(d, top, n + 1) == bld->delta(d, n + 1);
                });
                for (int i = 1; i <= top - 1; ++i) {
                    add("variant.cs-neighborly" + tag(d, i, n + 1), heavy, [=](CheckResult& r) {
                        const auto missing = kernels::find_missing_cs_face(
                            bld->delta_variant(d, i, n + 1), i, n + 1, exec, budget);
                        r.pass = !missing.has_value();
                        if (missing) r.witnesses.push_back(*missing);
                    });
                    add("variant.not-next-neighborly" + tag(d, i, n + 1), heavy,
                        [=](CheckResult& r) {
                            r.pass = !check_cs_neighborly(bld->delta_variant(d, i, n + 1), i + 1,
                                                          n + 1, exec, budget);
                            if (!r.pass)
                                r.note = "unexpectedly cs-" + std::to_string(i + 1) + "-neighborly";
                        });
                }
            }

            add("prop.suspension-detect" + tag(d, n), heavy, [=](CheckResult& r) {
                const Complex s = suspension(bld->delta(d, n), n + 1, -(n + 1));
                r.pass = detect_suspension(s).has_value();
                if (!r.pass) r.note = "constructed suspension not detected";
            });

            if (d % 2 == 0) {
                const int k = d / 2;
                add("cor.boundary-top-ball[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
                    1, [=](CheckResult& r) {
                        r.pass = boundary(bld->ball(2 * k, k, n)) == bld->delta(2 * k - 1, n);
                    });
                add("remark.special-union[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
                    1, [=](CheckResult& r) {
                        const Complex& b = bld->ball(2 * k, k, n);
                        const Complex lhs = union_of(b, negate(b));
                        r.pass = lhs == suspension(bld->delta(2 * k - 1, n - 1), n, -n);
                    });
                if (n == 2 * k + 1) {
                    add("remark.special-crosspoly[k=" + std::to_string(k) + "]", 1,
                        [=](CheckResult& r) {
                            const Complex& b = bld->ball(2 * k, k, n);
                            r.pass = union_of(b, negate(b)) == bld->delta(2 * k, n);
                        });
                } else {
                    add("remark.special-not-subcomplex[k=" + std::to_string(k) +
                            ",n=" + std::to_string(n) + "]",
                        1, [=](CheckResult& r) {
                            r.pass = !is_subcomplex(bld->ball(2 * k, k, n), bld->delta(2 * k, n));
                            if (!r.pass) r.note = "unexpectedly a subcomplex";
                        });
                }
                add("prop.non-cs-boundary[l=" + std::to_string(k) + ",m=" + std::to_string(n) + "]",
                    1, [=](CheckResult& r) {
                        r.pass = !check_free_involution(boundary(bld->ball(2 * k, k - 1, n)));
                        if (!r.pass) r.note = "boundary is unexpectedly centrally symmetric";
                    });
                if (n >= 2 * k + 2) {
                    add("prop.no-suspension[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
                        5 * heavy, [=](CheckResult& r) {
                            const auto pair = detect_suspension(bld->delta(2 * k, n));
                            r.pass = !pair.has_value();
                            if (pair)
                                r.note = "suspension poles {" + std::to_string(pair->first) + "," +
                                         std::to_string(pair->second) + "}";
                        });
                }
                if (k >= 2) {
                    add("prop.sphere-inclusion[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
                        1, [=](CheckResult& r) {
                            const auto w =
                                subcomplex_witness(bld->delta(2 * k - 1, n), bld->delta(2 * k, n));
                            r.pass = !w.has_value();
                            if (w) r.witnesses.push_back(*w);
                        });
                    const std::string dtag = "[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]";
                    add("dball.contains-neg-B" + dtag, 1, [=](CheckResult& r) {
                        const auto w = subcomplex_witness(negate(bld->ball(2 * k, k - 1, n)),
                                                          bld->special_ball_D(k, n));
                        r.pass = !w.has_value();
                        if (w) r.witnesses.push_back(*w);
                    });
                    add("dball.facet-disjoint" + dtag, 1, [=](CheckResult& r) {
                        const Complex& dn = bld->special_ball_D(k, n);
                        const auto shared = shared_facets(dn, negate(dn));
                        r.pass = shared.empty();
                        if (!shared.empty()) r.witnesses.push_back(shared.front());
                    });
                    add("dball.union" + dtag, 1, [=](CheckResult& r) {
                        const Complex& dn = bld->special_ball_D(k, n);
                        r.pass = union_of(dn, negate(dn)) == bld->delta(2 * k, n);
                    });
                    add("dball.boundary" + dtag, 1, [=](CheckResult& r) {
                        r.pass = boundary(bld->special_ball_D(k, n)) == bld->delta(2 * k - 1, n);
                    });
                    add("dball.stacked" + dtag, heavy, [=](CheckResult& r) {
                        r.pass = check_stacked(bld->special_ball_D(k, n), k);
                    });
                }
            }
        }
    }

    if (kind == SuiteKind::full) {
        for (int k = 2; 2 * k <= d_max; ++k) {
            for (int n = 2 * k - 1; n <= 2 * k + n_slack - 1; ++n) {
                add("prop.link-identities[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
                    1, [=](CheckResult& r) {
                        const VerificationReport sub = check_link_identities(*bld, k, n);
                        r.pass = sub.all_pass();
                        if (!r.pass) {
                            for (const CheckResult& c : sub.checks)
                                if (!c.pass) { r.note = c.claim + ": " + c.note; break; }
                        }
                    });
            }
        }
    }

    VerificationReport rep;
    rep.checks.resize(cells.size());

    std::vector<int> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&cells](int x, int y) { return cells[x].weight > cells[y].weight; });

    const int total = static_cast<int>(cells.size());
    std::string refused;  // first resource refusal, re-raised after the loop
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (cfg.exec == kernels::Exec::parallel)
#endif
    for (int j = 0; j < total; ++j) {
        const int i = order[j];
        try {
            rep.checks[i] = timed_check(cells[i].claim,
                                        [&](CheckResult& r) { cells[i].body(r); });
        } catch (const resource_error& e) {
#ifdef _OPENMP
#pragma omp critical(csph_suite_refused)
#endif
            if (refused.empty()) refused = e.what();
            rep.checks[i].claim = cells[i].claim;
            rep.checks[i].pass = false;
            rep.checks[i].note = std::string("refused: ") + e.what();
        }
    }
    if (!refused.empty())
        throw resource_error(refused);
    return rep;
}

}  // namespace csph
