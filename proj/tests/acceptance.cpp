/**
 * Acceptance gate: one pass/fail line per criterion, nonzero exit when any
 * criterion fails.  Each criterion is independent; an exception inside one
 * is reported as a failure of that criterion only.
 */

#include "dmorse/complex.hpp"
#include "dmorse/conf2.hpp"
#include "dmorse/cup.hpp"
#include "dmorse/gradient.hpp"
#include "dmorse/morse.hpp"
#include "dmorse/snf.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dmorse;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion(int n, const std::string& what, const std::function<bool()>& body) {
    Clock::time_point start = Clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << " ("
         << seconds_since(start) << "s)";
    if (!ok && !note.empty()) line << " [" << note << "]";
    std::cout << line.str() << "\n" << std::flush;
    if (!ok) ++failures;
}

ChainExpr dual(const Simplex& s) {
    ChainExpr x(s.dim());
    x.add_term(s, 1);
    return x;
}

bool critical_faces_are(const GradientField& F, const std::vector<Simplex>& expected) {
    std::vector<Simplex> got;
    for (int d = 0; d <= F.complex().dim(); ++d)
        for (const Simplex& s : F.critical_faces(d)) got.push_back(s);
    std::vector<Simplex> want = expected;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool is_strict_edge(int m, const Simplex& e) {
    auto [p, q] = pair_unrank(m, e[0]);
    auto [r, s] = pair_unrank(m, e[1]);
    return p < r && q < s;
}

bool supported_on_strict_edges(int m, const ChainExpr& z) {
    for (const auto& [face, coef] : z.terms()) {
        (void)coef;
        if (!is_strict_edge(m, face)) return false;
    }
    return true;
}

/// Columns of a critical 2-face [[a,a,c],[b,d,d]] as the four labels.
struct Corners {
    int a, b, c, d;
};
Corners read_corners(int m, const Simplex& f) {
    auto [a, b] = pair_unrank(m, f[0]);
    auto [a2, d] = pair_unrank(m, f[1]);
    auto [c, d2] = pair_unrank(m, f[2]);
    if (a != a2 || d != d2) throw contract_violation("not a face of the critical shape");
    return {a, b, c, d};
}

long long model_chi_formula(long long m) { return m * (m * m * m - 10 * m * m + 27 * m - 18) / 4; }

struct ModelData {
    OrderedComplex C;
    GradientField F;
    MorseComplex mc;

    explicit ModelData(int m)
        : C(two_point_model(complete_graph(m))), F(reference_field(C, m)),
          mc(build_morse_complex(F)) {}
};

ModelData& model(int m) {
    static std::map<int, std::unique_ptr<ModelData>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, std::make_unique<ModelData>(m)).first;
    return *it->second;
}

struct RingData {
    Conf2Basis basis;
    CohomologyRing R;

    explicit RingData(int m) : basis(conf2_basis(m)), R(conf2_ring(model(m).mc, basis)) {}
};

RingData& ring(int m) {
    static std::map<int, std::unique_ptr<RingData>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, std::make_unique<RingData>(m)).first;
    return *it->second;
}

/// Expected degree-1 Morse coboundary of a corner edge dual: four signed
/// families of critical 2-faces indexed by the free labels x and y.
ChainExpr expected_corner_coboundary(int m, int a, int b) {
    ChainExpr out(2);
    for (int x = a + 1; x < m; ++x)
        for (int y = 1; y < b; ++y)
            if (x != b && x != y && y != a) out.add_term(matrix_face(m, {a, a, x}, {y, b, b}), 1);
    for (int x = a + 1; x < m; ++x)
        for (int y = b + 1; y < m; ++y)
            if (x != b && x != y && y != a) out.add_term(matrix_face(m, {a, a, x}, {b, y, y}), -1);
    for (int x = 1; x < a; ++x)
        for (int y = b + 1; y < m; ++y)
            if (x != b && x != y && y != a) out.add_term(matrix_face(m, {x, x, a}, {b, y, y}), 1);
    for (int x = 1; x < a; ++x)
        for (int y = 1; y < b; ++y)
            if (x != b && x != y && y != a) out.add_term(matrix_face(m, {x, x, a}, {y, b, b}), -1);
    return out;
}

/// Expected Morse boundary of a critical 2-face in the corner-edge basis:
/// four signed corner edges, the last omitted in the one excluded position.
ChainExpr expected_two_face_boundary(int m, const Corners& f) {
    ChainExpr out(1);
    out.add_term(matrix_face(m, {f.a, m - 1}, {f.d, m}), 1);
    out.add_term(matrix_face(m, {f.a, m - 1}, {f.b, m}), -1);
    out.add_term(matrix_face(m, {f.c, m - 1}, {f.b, m}), 1);
    if (!(f.c == m - 1 && f.d == m - 2))
        out.add_term(matrix_face(m, {f.c, m - 1}, {f.d, m}), -1);
    return out;
}

std::vector<Coeff> unit_coords(int n, int k) {
    std::vector<Coeff> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

bool all_zero(const std::vector<Coeff>& v) {
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

std::vector<Coeff> pair_product(const CohomologyRing& R, const std::vector<Coeff>& u,
                                const std::vector<Coeff>& v) {
    std::vector<Coeff> out(static_cast<std::size_t>(R.two_rank()), 0);
    for (int i = 0; i < R.one_rank(); ++i)
        for (int j = 0; j < R.one_rank(); ++j) {
            Coeff c = checked_mul(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
            if (c == 0) continue;
            for (int k = 0; k < R.two_rank(); ++k)
                out[static_cast<std::size_t>(k)] =
                    checked_add(out[static_cast<std::size_t>(k)],
                                checked_mul(c, R.products[static_cast<std::size_t>(i)]
                                                         [static_cast<std::size_t>(j)]
                                                         [static_cast<std::size_t>(k)]));
        }
    return out;
}

bool criterion_fixture_fields() {
    bool ok = true;
    {
        OrderedComplex K = testing::rp2();
        Clock::time_point t = Clock::now();
        GradientField F = build_field_staged(K);
        ok = ok && seconds_since(t) < 1.0;
        ok = ok && critical_faces_are(F, {Simplex({5}), Simplex({1, 4}), Simplex({0, 2, 3})});
    }
    {
        OrderedComplex K = testing::torus();
        Clock::time_point t = Clock::now();
        GradientField F = build_field_staged(K);
        ok = ok && seconds_since(t) < 1.0;
        ok = ok && critical_faces_are(F, {Simplex({8}), Simplex({1, 7}), Simplex({4, 7}),
                                          Simplex({0, 2, 6})});
    }
    {
        OrderedComplex K = testing::punctured_rp2();
        Clock::time_point t = Clock::now();
        GradientField F = build_field_staged(K);
        ok = ok && seconds_since(t) < 1.0;
        ok = ok && critical_faces_are(F, {Simplex({5}), Simplex({3, 4})});
    }
    return ok;
}

bool criterion_construction_equivalence() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (const OrderedComplex& K :
         {testing::rp2(), testing::torus(), testing::punctured_rp2()})
        ok = ok && build_field_staged(K).same_pairings(build_field_fast(K));
    for (int m = 4; m <= 6; ++m) {
        const OrderedComplex& C = model(m).C;
        ok = ok && build_field_staged(C).same_pairings(build_field_fast(C));
    }

    // every vertex order of the small projective plane yields three critical
    // faces, the optimum
    OrderedComplex base = testing::rp2();
    std::vector<Vertex> perm(static_cast<std::size_t>(base.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    int orders = 0;
    do {
        OrderedComplex K = relabel(base, perm);
        GradientField F = build_field_staged(K);
        int total = 0;
        for (int d = 0; d <= K.dim(); ++d) total += F.critical_count(d);
        if (total != 3) ok = false;
        ++orders;
    } while (std::next_permutation(perm.begin(), perm.end()));
    ok = ok && orders == 720;
    return ok && seconds_since(start) < 60.0;
}

bool criterion_reference_field() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int m = 4; m <= 7; ++m) {
        const ModelData& M = model(m);
        GradientField algorithmic = build_field_staged(M.C);
        ok = ok && algorithmic.same_pairings(M.F);
        ok = ok && M.F.critical_count(0) == 1;
        ok = ok && M.F.critical_count(1) == 2 * (m - 2) * (m - 2) - 1;
        long long c2 = static_cast<long long>(m - 1) * (m - 2) * (m - 3) * (m - 4) / 4;
        ok = ok && (M.C.dim() < 2 ? c2 == 0 : M.F.critical_count(2) == c2);
    }
    return ok && seconds_since(start) < 60.0;
}

bool criterion_homology() {
    bool ok = true;
    {
        BettiProfile b = homology(model(4).mc);
        ok = ok && b.betti == std::vector<long long>{1, 7, 0} && b.torsion_free();
    }
    for (int m = 5; m <= 7; ++m) {
        BettiProfile b = homology(model(m).mc);
        long long b1 = static_cast<long long>(m - 1) * (m - 2);
        long long b2 = static_cast<long long>(m) * (m - 2) * (m - 3) * (m - 5) / 4 + 1;
        ok = ok && b.betti == std::vector<long long>{1, b1, b2} && b.torsion_free();
        if (m == 5) ok = ok && b.betti == std::vector<long long>{1, 12, 1};
    }
    for (int m = 4; m <= 8; ++m) {
        OrderedComplex C = two_point_model(complete_graph(m));
        ok = ok && euler_characteristic(C) == model_chi_formula(m);
    }
    return ok;
}

bool criterion_coboundary_formulas() {
    bool ok = true;
    for (int m : {5, 6}) {
        const ModelData& M = model(m);
        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b) {
                if (!corner_domain(m, a, b)) continue;
                ok = ok && coboundary_morse(M.mc, corner_edge_dual(m, a, b)) ==
                               expected_corner_coboundary(m, a, b);
            }
        Conf2Basis& basis = ring(m).basis;
        for (auto [b, d] : basis.first_anchored)
            ok = ok && coboundary_morse(M.mc, anchored_first_dual(m, b, d)).zero();
        for (auto [a, c] : basis.second_anchored)
            ok = ok && coboundary_morse(M.mc, anchored_second_dual(m, a, c)).zero();

        for (int i = 0; i < M.mc.critical_count(2); ++i) {
            const Simplex& f = M.mc.critical_face(2, i);
            ChainExpr expected = expected_two_face_boundary(m, read_corners(m, f));
            ChainExpr got(1);
            for (int j = 0; j < M.mc.critical_count(1); ++j) {
                Coeff c = M.mc.boundary[2].at(j, i);
                if (c != 0) got.add_term(M.mc.critical_face(1, j), c);
            }
            ok = ok && got == expected;
        }
    }
    return ok;
}

bool criterion_transfer_maps() {
    bool ok = true;
    for (int m : {5, 6}) {
        const ModelData& M = model(m);
        Conf2Basis& basis = ring(m).basis;

        auto congruent = [&](const ChainExpr& got, const ChainExpr& want) {
            return supported_on_strict_edges(m, got - want);
        };

        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b) {
                if (!corner_domain(m, a, b)) continue;
                ChainExpr want(1);
                want.add_term(matrix_face(m, {a, a}, {b, m}), 1);
                for (int x = a + 1; x <= m - 1; ++x)
                    if (x != b) want.add_term(matrix_face(m, {a, x}, {b, b}), 1);
                for (int y = 1; y < a; ++y)
                    if (y != b) want.add_term(matrix_face(m, {y, a}, {b, b}), -1);
                ok = ok && congruent(phi_up(M.mc, corner_edge_dual(m, a, b)), want);
            }
        for (auto [b, d] : basis.first_anchored) {
            ChainExpr want(1);
            for (int x = 1; x <= m; ++x)
                if (x != b && x != d) want.add_term(matrix_face(m, {x, x}, {b, d}), 1);
            ok = ok && congruent(phi_up(M.mc, anchored_first_dual(m, b, d)), want);
        }
        for (auto [a, c] : basis.second_anchored) {
            ChainExpr want(1);
            for (int y = 1; y <= m; ++y)
                if (y != a && y != c) want.add_term(matrix_face(m, {a, c}, {y, y}), 1);
            ok = ok && congruent(phi_up(M.mc, anchored_second_dual(m, a, c)), want);
        }

        // projection of the four 2-face shapes
        for (int a = 1; a < m; ++a)
            for (int c = a + 1; c < m; ++c)
                for (int b = 1; b < m; ++b)
                    for (int d = b + 1; d < m; ++d) {
                        if (b == a || a == d || d == c) continue;
                        ChainExpr got = phi_down(M.mc, dual(matrix_face(m, {a, a, c}, {b, d, d})));
                        ChainExpr want(2);
                        if (b != c) want.add_term(matrix_face(m, {a, a, c}, {b, d, d}), 1);
                        ok = ok && got == want;
                    }
        for (int a = 1; a < m; ++a)
            for (int c = a + 1; c <= m - 1; ++c)
                for (int b = 1; b < m; ++b)
                    for (int d = b + 1; d < m - 1; ++d) {
                        if (a == b || b == c || c == d) continue;
                        ChainExpr got = phi_down(M.mc, dual(matrix_face(m, {a, c, c}, {b, b, d})));
                        ChainExpr want(2);
                        if (a != d) want.add_term(matrix_face(m, {a, a, c}, {b, d, d}), -1);
                        ok = ok && got == want;
                    }
        for (int a = 1; a < m; ++a)
            for (int c = a + 1; c < m - 1; ++c)
                for (int b = 1; b <= m - 1; ++b) {
                    if (b == a) continue;
                    ChainExpr got = phi_down(M.mc, dual(matrix_face(m, {a, a, c}, {b, m, m})));
                    ChainExpr want(2);
                    if (b != c) {
                        for (int y = 1; y < b; ++y)
                            if (y != a && y != c) want.add_term(matrix_face(m, {a, a, c}, {y, b, b}), 1);
                        for (int x = b + 1; x < m; ++x)
                            if (x != a && x != c) want.add_term(matrix_face(m, {a, a, c}, {b, x, x}), -1);
                    }
                    ok = ok && got == want;
                }
        for (int a = 1; a < m; ++a)
            for (int c = a + 1; c <= m - 1; ++c)
                for (int b = 1; b <= m - 1; ++b) {
                    if (a == b || b == c) continue;
                    if (!(c < m - 1 || b + 1 < m - 1)) continue;
                    ChainExpr got = phi_down(M.mc, dual(matrix_face(m, {a, c, c}, {b, b, m})));
                    ChainExpr want(2);
                    for (int x = b + 1; x < m; ++x)
                        if (x != a && x != c) want.add_term(matrix_face(m, {a, a, c}, {b, x, x}), 1);
                    for (int y = 1; y < b; ++y)
                        if (y != a && y != c) want.add_term(matrix_face(m, {a, a, c}, {y, b, b}), -1);
                    ok = ok && got == want;
                }
    }
    return ok;
}

bool criterion_ring_table() {
    bool ok = true;
    {
        const CohomologyRing& R = ring(5).R;
        ok = ok && R.one_rank() == 12 && R.two_rank() == 1;

        std::map<std::pair<int, int>, Coeff> table = {
            {{0, 11}, -1}, {{1, 6}, 1},  {{1, 7}, -1}, {{1, 8}, 1},  {{1, 9}, 1},  {{1, 11}, 1},
            {{2, 8}, -1},  {{3, 7}, 1},  {{4, 7}, -1}, {{4, 8}, 1},  {{4, 9}, 1},  {{4, 10}, -1},
            {{4, 11}, 1},  {{5, 6}, -1}, {{5, 7}, 1},  {{5, 8}, -1}, {{5, 9}, -1}, {{5, 10}, 1},
            {{5, 11}, -1}};
        for (int i = 0; i < 12 && ok; ++i)
            for (int j = 0; j < 12 && ok; ++j) {
                Coeff want = 0;
                auto it = table.find({i, j});
                if (it != table.end()) want = it->second;
                else if ((it = table.find({j, i})) != table.end()) want = -it->second;
                ok = R.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][0] ==
                     want;
            }

        // primed basis: exactly six nonzero unordered products
        std::vector<std::vector<Coeff>> basis(12);
        for (int i = 0; i < 12; ++i) basis[static_cast<std::size_t>(i)] = unit_coords(12, i);
        for (int i = 0; i < 6; ++i) basis[1][static_cast<std::size_t>(i)] = 1;
        basis[4][5] = 1;
        basis[5][1] = 1;
        std::map<std::pair<int, int>, Coeff> nonzero;
        for (int i = 0; i < 12; ++i)
            for (int j = i; j < 12; ++j) {
                std::vector<Coeff> p = pair_product(R, basis[static_cast<std::size_t>(i)],
                                                    basis[static_cast<std::size_t>(j)]);
                if (!all_zero(p)) nonzero[{i, j}] = p[0];
            }
        ok = ok && nonzero == std::map<std::pair<int, int>, Coeff>{{{1, 9}, 1},  {{3, 7}, 1},
                                                                   {{5, 10}, 1}, {{0, 11}, -1},
                                                                   {{2, 8}, -1}, {{4, 6}, -1}};
    }

    // vanishing/nonvanishing pattern of the anchored products
    for (int m : {5, 6, 7}) {
        const RingData& D = ring(m);
        const CohomologyRing& R = D.R;
        int nc = static_cast<int>(D.basis.corner.size());
        int nf = static_cast<int>(D.basis.first_anchored.size());
        int ns = static_cast<int>(D.basis.second_anchored.size());
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j)
                ok = ok && all_zero(R.products[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)]);
        for (int i = nc; i < nc + nf; ++i)
            for (int j = nc; j < nc + nf; ++j)
                ok = ok && all_zero(R.products[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)]);
        for (int i = nc + nf; i < nc + nf + ns; ++i)
            for (int j = nc + nf; j < nc + nf + ns; ++j)
                ok = ok && all_zero(R.products[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)]);
        for (int fi = 0; fi < nf; ++fi)
            for (int si = 0; si < ns; ++si) {
                auto [b, d] = D.basis.first_anchored[static_cast<std::size_t>(fi)];
                auto [a, c] = D.basis.second_anchored[static_cast<std::size_t>(si)];
                const std::vector<Coeff>& got = R.products[static_cast<std::size_t>(nc + fi)]
                                                          [static_cast<std::size_t>(nc + nf + si)];
                bool disjoint = a != b && a != c && a != d && b != c && b != d && c != d;
                if (!disjoint) {
                    ok = ok && all_zero(got);
                } else {
                    std::vector<Coeff> want = class_in_basis(
                        model(m).mc, D.basis, dual(matrix_face(m, {a, a, c}, {b, d, d})));
                    ok = ok && !all_zero(want) && got == want;
                }
            }
    }
    return ok;
}

bool criterion_dependence_relations() {
    bool ok = true;
    for (int m : {5, 6}) {
        const ModelData& M = model(m);
        const int c1 = M.mc.critical_count(1);
        const int c2 = M.mc.critical_count(2);
        IntMatrix delta(c2, c1);
        for (int i = 0; i < c2; ++i)
            for (int j = 0; j < c1; ++j) delta.at(i, j) = M.mc.boundary[2].at(j, i);
        IntSolver solver(delta);

        std::vector<std::pair<std::string, ChainExpr>> relations = dependence_relations(m);
        ok = ok && !relations.empty();
        for (const auto& [name, rel] : relations) {
            (void)name;
            std::vector<Coeff> rhs(static_cast<std::size_t>(c2), 0);
            for (const auto& [face, coef] : rel.terms()) {
                int idx = M.mc.crit_index(2, M.C.rank_of(face));
                if (idx < 0) return false;
                rhs[static_cast<std::size_t>(idx)] = coef;
            }
            ok = ok && solver.solve(rhs).has_value();
        }
    }
    return ok;
}

bool criterion_tc_bound() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    const CohomologyRing& R = ring(6).R;
    for (int s : {2, 3}) {
        ZclPlan plan = zcl_plan(R, s);
        ok = ok && plan.mod2;
        ZclResult res = zcl_lower_bound(R, plan.candidates);
        ok = ok && !res.product.zero();
        ok = ok && res.bound == 2 * s && res.bound == s * R.hdim();
    }

    // symbolic check of the split-product law in a toy mod-2 ring
    CohomologyRing toy;
    toy.one_names = {"x", "y", "z", "w"};
    toy.two_names = {"xy", "xw", "zw", "zz", "ww"};
    toy.products.assign(4, std::vector<std::vector<Coeff>>(4, std::vector<Coeff>(5, 0)));
    auto set = [&toy](int i, int j, int k) {
        toy.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(k)] = 1;
        toy.products[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(k)] = 1;
    };
    set(0, 1, 0);
    set(0, 3, 1);
    set(2, 3, 2);
    set(2, 2, 3);
    set(3, 3, 4);
    for (int s : {2, 3, 4}) {
        auto in_slot = [&](int k, int slot) {
            return one_class_in_slot(toy, s, true, slot, unit_coords(4, k));
        };
        TensorElt prod = tensor_unit(s, true);
        for (int i = 2; i <= s; ++i)
            prod = tensor_mul(toy, prod, tensor_add(in_slot(0, 0), in_slot(0, i - 1)));
        for (int i = 2; i <= s; ++i)
            prod = tensor_mul(toy, prod, tensor_add(in_slot(1, 0), in_slot(1, i - 1)));
        prod = tensor_mul(toy, prod, tensor_add(in_slot(2, 0), in_slot(2, s - 1)));
        prod = tensor_mul(toy, prod, tensor_add(in_slot(3, 0), in_slot(3, s - 1)));

        std::vector<std::pair<int, int>> front(static_cast<std::size_t>(s), {2, 0});
        front[0] = {2, 2};
        std::vector<std::pair<int, int>> back(static_cast<std::size_t>(s), {2, 0});
        back[static_cast<std::size_t>(s - 1)] = {2, 2};
        std::map<std::vector<std::pair<int, int>>, Coeff> expected;
        expected[front] = 1;
        expected[back] = 1;
        ok = ok && prod.terms == expected;
    }
    return ok && seconds_since(start) < 60.0;
}

bool criterion_property_suites() {
    bool ok = true;

    std::mt19937 rng(0xacce97);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        OrderedComplex K = testing::random_complex(rng, 7, 7, 4);
        long long faces = 0;
        for (int d = 0; d <= K.dim(); ++d) faces += K.count(d);
        ok = ok && faces <= 40;

        GradientField F = build_field_staged(K);
        ok = ok && F.same_pairings(build_field_fast(K));
        ok = ok && verify_acyclic(F).acyclic;
        ok = ok && verify_maximality(F).maximal;

        MorseComplex mc = build_morse_complex(F);
        for (int p = 1; p < static_cast<int>(mc.boundary.size()); ++p) {
            const IntMatrix& a = mc.boundary[static_cast<std::size_t>(p - 1)];
            const IntMatrix& b = mc.boundary[static_cast<std::size_t>(p)];
            for (int r = 0; r < a.rows; ++r)
                for (int c = 0; c < b.cols; ++c) {
                    Coeff s = 0;
                    for (int k = 0; k < b.rows; ++k)
                        s = checked_add(s, checked_mul(a.at(r, k), b.at(k, c)));
                    ok = ok && s == 0;
                }
        }

        BettiProfile collapsed = homology(mc);
        BettiProfile direct = homology(K);
        ok = ok && collapsed.betti == direct.betti && collapsed.torsion == direct.torsion;
    }

    std::mt19937 rng2(0xacce98);
    for (int trial = 0; trial < 60 && ok; ++trial) {
        OrderedComplex K = testing::random_complex(rng2, 8, 11, 5);
        long long faces = 0;
        for (int d = 0; d <= K.dim(); ++d) faces += K.count(d);
        ok = ok && faces <= 60;

        GradientField F = build_field_staged(K);
        for (int d = 0; d <= K.dim() && ok; ++d)
            for (int target = 0; target < K.count(d) && ok; ++target) {
                std::vector<Coeff> up = upper_path_table(F, d, target);
                std::vector<Coeff> down = lower_path_table(F, d, target);
                for (int from = 0; from < K.count(d); ++from) {
                    ok = ok && up[static_cast<std::size_t>(from)] ==
                                   testing::brute_upper_paths(F, d, from, target);
                    ok = ok && down[static_cast<std::size_t>(from)] ==
                                   testing::brute_lower_paths(F, d, from, target);
                }
            }
    }
    return ok;
}

} // namespace

int main() {
    criterion(1, "staged field reproduces the pinned critical faces on all three fixtures",
              criterion_fixture_fields);
    criterion(2, "staged and fast fields agree everywhere; all 720 vertex orders stay optimal",
              criterion_construction_equivalence);
    criterion(3, "algorithmic field equals the closed-form field with the predicted counts",
              criterion_reference_field);
    criterion(4, "homology of the model matches the closed forms (ranks, torsion, Euler)",
              criterion_homology);
    criterion(5, "Morse coboundary matches the four-family and four-term formulas sign by sign",
              criterion_coboundary_formulas);
    criterion(6, "transfer maps match their closed forms on lifts and projections",
              criterion_transfer_maps);
    criterion(7, "cohomology ring reproduces the 12x12 table, primed products, and the pattern",
              criterion_ring_table);
    criterion(8, "degree-2 dependence relations are coboundaries", criterion_dependence_relations);
    criterion(9, "zero-divisor products certify the doubled lower bound; product law verified",
              criterion_tc_bound);
    criterion(10, "randomized suites: construction, acyclicity, homology, path-sum oracles",
              criterion_property_suites);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
