#include "dmorse/conf2.hpp"

#include "dmorse/snf.hpp"
#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace dmorse;

namespace {

OrderedComplex model(int m) { return two_point_model(complete_graph(m)); }

ChainExpr dual(const Simplex& s) {
    ChainExpr x(s.dim());
    x.add_term(s, 1);
    return x;
}

/// Read the rows (p,q,r,s) of a 2-face [[p,p,r],[q,s,s]] of the model.
struct Rows {
    int p, q, r, s;
};
Rows rows_of(int m, const Simplex& f) {
    REQUIRE(f.dim() == 2);
    auto [p, q] = pair_unrank(m, f[0]);
    auto [p2, s] = pair_unrank(m, f[1]);
    auto [r, s2] = pair_unrank(m, f[2]);
    REQUIRE(p == p2);
    REQUIRE(s == s2);
    return {p, q, r, s};
}

std::vector<long long> padded(std::vector<long long> v, std::size_t n) {
    v.resize(n, 0);
    return v;
}

int crit_idx(const MorseComplex& mc, int d, const Simplex& f) {
    int idx = mc.crit_index(d, mc.K->rank_of(f));
    REQUIRE(idx >= 0);
    return idx;
}

} // namespace

TEST_CASE("model of a single edge is two isolated points") {
    OrderedComplex C = model(2);
    CHECK(C.dim() == 0);
    CHECK(C.count(0) == 2);
    CHECK(C.label(0) == "(1,2)");
    CHECK(C.label(1) == "(2,1)");
}

TEST_CASE("model of the complete graph on four vertices") {
    OrderedComplex C = model(4);
    CHECK(C.dim() == 2);
    CHECK(C.count(0) == 12);
    CHECK(euler_characteristic(C) == -6);
    CHECK(conf2_euler_characteristic(4) == -6);
    // purity: everything below the top dimension has a cofacet
    for (int d = 0; d < C.dim(); ++d)
        for (int i = 0; i < C.count(d); ++i)
            CHECK_FALSE(C.cofacets(d, i).empty());
}

TEST_CASE("pair vertices are numbered in pair-lexicographic order") {
    for (int m : {4, 5, 6, 7}) {
        int n = m * (m - 1);
        for (int r = 0; r < n; ++r) {
            auto [a, b] = pair_unrank(m, r);
            CHECK(a != b);
            CHECK(pair_rank(m, a, b) == r);
        }
        // lexicographic: (1,2) first, (m,m-1) last
        CHECK(pair_rank(m, 1, 2) == 0);
        CHECK(pair_rank(m, m, m - 1) == n - 1);
        OrderedComplex C = model(m);
        CHECK(C.label(pair_rank(m, 2, 3)) == "(2,3)");
    }
}

TEST_CASE("matrix faces: construction, labels, validation") {
    const int m = 5;
    Simplex f = matrix_face(m, {1, 1, 3}, {2, 4, 4});
    CHECK(f == Simplex::from_unsorted({pair_rank(m, 1, 2), pair_rank(m, 1, 4),
                                       pair_rank(m, 3, 4)}));
    CHECK(matrix_label(m, f) == "[[1,1,3],[2,4,4]]");

    Simplex g = matrix_face(m, {1, 3, 3}, {2, 2, 4});
    CHECK(matrix_label(m, g) == "[[1,3,3],[2,2,4]]");

    Simplex e = matrix_face(m, {1, 1}, {2, 4});
    CHECK(e.dim() == 1);
    CHECK(matrix_label(m, e) == "[[1,1],[2,4]]");

    CHECK_THROWS_AS(matrix_face(m, {1}, {1}), contract_violation);        // diagonal
    CHECK_THROWS_AS(matrix_face(m, {2, 1}, {3, 3}), contract_violation);  // not monotone
    CHECK_THROWS_AS(matrix_face(m, {1, 1}, {2, 2}), contract_violation);  // repeated column
    CHECK_THROWS_AS(matrix_face(m, {1, 2}, {3}), contract_violation);     // ragged rows
    CHECK_THROWS_AS(matrix_face(m, {1, 2, 3}, {4, 4, 4}), contract_violation); // 3 values in a row
    CHECK_THROWS_AS(matrix_face(m, {0, 0}, {1, 2}), contract_violation);  // out of range
}

TEST_CASE("the hand-built field coincides with the algorithmic one") {
    for (int m : {4, 5, 6}) {
        OrderedComplex C = model(m);
        GradientField ref = reference_field(C, m);
        GradientField alg = build_field_staged(C);
        CHECK(ref.same_pairings(alg));
        CHECK(verify_acyclic(ref).acyclic);
        CHECK(verify_maximality(ref).maximal);

        std::vector<long long> counts = reference_critical_counts(m);
        REQUIRE(ref.critical_vector() ==
                std::vector<int>{static_cast<int>(counts[0]), static_cast<int>(counts[1]),
                                 static_cast<int>(counts[2])});
        std::vector<std::vector<Simplex>> faces = reference_critical_faces(m);
        for (int d = 0; d <= 2; ++d)
            CHECK(ref.critical_faces(d) == faces[static_cast<std::size_t>(d)]);
    }
}

TEST_CASE("closed-form counts: Euler characteristic and critical faces") {
    for (int m = 4; m <= 6; ++m)
        CHECK(conf2_euler_characteristic(m) == euler_characteristic(model(m)));
    CHECK(conf2_euler_characteristic(4) == -6);
    CHECK(conf2_euler_characteristic(5) == -10);
    CHECK(conf2_euler_characteristic(6) == 0);
    CHECK(conf2_euler_characteristic(7) == 42);
    CHECK(conf2_euler_characteristic(8) == 140);
    for (int m = 4; m <= 8; ++m) {
        std::vector<long long> c = reference_critical_counts(m);
        CHECK(c[0] - c[1] + c[2] == conf2_euler_characteristic(m));
    }
    CHECK(reference_critical_counts(5) == std::vector<long long>{1, 17, 6});
    CHECK(reference_critical_counts(6) == std::vector<long long>{1, 31, 30});
}

TEST_CASE("homology of the model matches the closed form") {
    for (int m : {4, 5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        BettiProfile b = homology(mc);
        CHECK(b.betti == padded(conf2_reference_betti(m), b.betti.size()));
        CHECK(b.torsion_free());
    }
    CHECK(conf2_reference_betti(5) == std::vector<long long>{1, 12, 1});
    CHECK(conf2_reference_betti(6) == std::vector<long long>{1, 20, 19});
}

TEST_CASE("degree-1 basis: counts, cocycles, independence") {
    for (int m : {4, 5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        Conf2Basis basis = conf2_basis(m);
        long long b1 = conf2_reference_betti(m)[1];
        REQUIRE(static_cast<long long>(basis.one_cocycles.size()) == b1);
        REQUIRE(basis.one_names.size() == basis.one_cocycles.size());
        CHECK(basis.corner.size() ==
              static_cast<std::size_t>(m == 4 ? 5 : 2 * m - 4));

        for (const ChainExpr& z : basis.one_cocycles) CHECK(is_morse_cocycle(mc, z));

        // the degree-0 coboundary vanishes (one critical vertex), so class
        // independence is plain linear independence of the cocycles
        for (int r = 0; r < mc.boundary[1].rows; ++r)
            for (int c = 0; c < mc.boundary[1].cols; ++c)
                CHECK(mc.boundary[1].at(r, c) == 0);
        int c1 = mc.critical_count(1);
        IntMatrix B(c1, static_cast<int>(basis.one_cocycles.size()));
        for (std::size_t j = 0; j < basis.one_cocycles.size(); ++j)
            for (const auto& [face, coef] : basis.one_cocycles[j].terms())
                B.at(crit_idx(mc, 1, face), static_cast<int>(j)) = coef;
        CHECK(rank_z(B) == static_cast<int>(b1));
    }
}

TEST_CASE("corner cocycles are unitriangular over the corner edge duals") {
    for (int m : {5, 6}) {
        std::vector<std::pair<int, int>> domain;
        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b)
                if (corner_domain(m, a, b)) domain.emplace_back(a, b);
        int n = static_cast<int>(domain.size());
        REQUIRE(n == (m - 1) * (m - 2) - 1);

        IntMatrix U(n, n);
        for (int i = 0; i < n; ++i) {
            ChainExpr z = corner_cocycle(m, domain[static_cast<std::size_t>(i)].first,
                                         domain[static_cast<std::size_t>(i)].second);
            std::size_t matched = 0;
            for (int j = 0; j < n; ++j) {
                Simplex edge = matrix_face(m, {domain[static_cast<std::size_t>(j)].first, m - 1},
                                           {domain[static_cast<std::size_t>(j)].second, m});
                U.at(j, i) = z.coeff(edge);
                if (U.at(j, i) != 0) ++matched;
            }
            CHECK(matched == z.terms().size()); // support lies in corner edges
            CHECK(U.at(i, i) == 1);
            for (int j = i + 1; j < n; ++j) CHECK(U.at(j, i) == 0);
        }
        SmithResult s = smith_normal_form(U);
        REQUIRE(s.rank == n);
        for (Coeff f : s.invariant_factors) CHECK(f == 1);
    }
}

TEST_CASE("anchored duals are single-term cocycles on the expected edges") {
    const int m = 5;
    OrderedComplex C = model(m);
    GradientField F = reference_field(C, m);
    MorseComplex mc = build_morse_complex(F);

    ChainExpr first = anchored_first_dual(m, 1, 3);
    REQUIRE(first.terms().size() == 1);
    CHECK(first.coeff(matrix_face(m, {m, m}, {1, 3})) == 1);
    CHECK(is_morse_cocycle(mc, first));
    CHECK(coboundary_morse(mc, first).zero());

    ChainExpr second = anchored_second_dual(m, 2, 3);
    REQUIRE(second.terms().size() == 1);
    CHECK(second.coeff(matrix_face(m, {2, 3}, {m, m})) == 1);
    CHECK(coboundary_morse(mc, second).zero());

    CHECK_THROWS_AS(anchored_first_dual(m, 3, 1), contract_violation);
    CHECK_THROWS_AS(anchored_second_dual(m, 1, 4), contract_violation);
}

TEST_CASE("coboundary of corner duals follows the four-sum closed form") {
    for (int m : {5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        const std::vector<Simplex> crit2 = F.critical_faces(2);

        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b) {
                if (!corner_domain(m, a, b)) continue;
                ChainExpr expected(2);
                for (const Simplex& f : crit2) {
                    Rows w = rows_of(m, f);
                    Coeff c = 0;
                    // [[a,a,x],[y,b,b]]: x = w.r, y = w.q
                    if (w.p == a && w.s == b && a < w.r && w.q < b && w.r != b &&
                        w.r != w.q && w.q != a)
                        c += 1;
                    // [[a,a,x],[b,y,y]]: x = w.r, y = w.s
                    if (w.p == a && w.q == b && a < w.r && b < w.s && w.r != b &&
                        w.r != w.s && w.s != a)
                        c -= 1;
                    // [[x,x,a],[b,y,y]]: x = w.p, y = w.s
                    if (w.r == a && w.q == b && w.p < a && b < w.s && w.p != b &&
                        w.p != w.s && w.s != a)
                        c += 1;
                    // [[x,x,a],[y,b,b]]: x = w.p, y = w.q
                    if (w.r == a && w.s == b && w.p < a && w.q < b && w.p != b &&
                        w.p != w.q && w.q != a)
                        c -= 1;
                    if (c != 0) expected.add_term(f, c);
                }
                CHECK(coboundary_morse(mc, corner_edge_dual(m, a, b)) == expected);
            }

        // the coboundary vanishes on every anchored dual
        Conf2Basis basis = conf2_basis(m);
        for (auto [b2, d2] : basis.first_anchored)
            CHECK(coboundary_morse(mc, anchored_first_dual(m, b2, d2)).zero());
        for (auto [a2, c2] : basis.second_anchored)
            CHECK(coboundary_morse(mc, anchored_second_dual(m, a2, c2)).zero());
    }
}

TEST_CASE("boundary columns of critical 2-faces follow the corner closed form") {
    for (int m : {5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        const std::vector<Simplex> crit2 = F.critical_faces(2);

        for (const Simplex& f : crit2) {
            Rows w = rows_of(m, f); // [[a,a,c],[b,d,d]] with a=p, b=q, c=r, d=s
            ChainExpr expected(1);
            expected.add_term(matrix_face(m, {w.p, m - 1}, {w.s, m}), 1);
            expected.add_term(matrix_face(m, {w.p, m - 1}, {w.q, m}), -1);
            expected.add_term(matrix_face(m, {w.r, m - 1}, {w.q, m}), 1);
            if (!(w.r == m - 1 && w.s == m - 2))
                expected.add_term(matrix_face(m, {w.r, m - 1}, {w.s, m}), -1);

            int col = crit_idx(mc, 2, f);
            ChainExpr actual(1);
            for (int r = 0; r < mc.critical_count(1); ++r) {
                Coeff v = mc.boundary[2].at(r, col);
                if (v != 0) actual.add_term(mc.critical_face(1, r), v);
            }
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("corrected cycles form a basis of the degree-2 kernel") {
    for (int m : {5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        Conf2Basis basis = conf2_basis(m);
        std::vector<ChainExpr> cycles = corrected_two_cycles(m);
        long long b2 = conf2_reference_betti(m)[2];
        REQUIRE(static_cast<long long>(cycles.size()) == b2);
        REQUIRE(basis.two_basis.size() == cycles.size());
        REQUIRE(static_cast<long long>(basis.two_basis.size() + basis.two_dependent.size()) ==
                reference_critical_counts(m)[2]);

        std::set<Simplex> dependent(basis.two_dependent.begin(), basis.two_dependent.end());
        IntMatrix Z(mc.critical_count(2), static_cast<int>(cycles.size()));
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const ChainExpr& z = cycles[i];
            CHECK(z.coeff(basis.two_basis[i]) == 1);
            for (const auto& [face, coef] : z.terms()) {
                CHECK((face == basis.two_basis[i] || dependent.count(face) == 1));
                Z.at(crit_idx(mc, 2, face), static_cast<int>(i)) = coef;
            }
            // a cycle of the Morse boundary
            for (int r = 0; r < mc.critical_count(1); ++r) {
                Coeff sum = 0;
                for (int c = 0; c < mc.critical_count(2); ++c)
                    sum = checked_add(sum, checked_mul(mc.boundary[2].at(r, c), Z.at(c, static_cast<int>(i))));
                CHECK(sum == 0);
            }
        }
        CHECK(rank_z(Z) == static_cast<int>(b2));
        CHECK(static_cast<long long>(mc.critical_count(2)) - rank_z(mc.boundary[2]) == b2);
    }

    // m = 5: the single basis face is the known leader
    Conf2Basis b5 = conf2_basis(5);
    REQUIRE(b5.two_basis.size() == 1);
    CHECK(matrix_label(5, b5.two_basis[0]) == "[[3,3,4],[1,2,2]]");
}

TEST_CASE("dependence relations lie in the image of the degree-1 coboundary") {
    for (int m : {5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        IntSolver solver(mc.coboundary(1));

        std::vector<std::pair<std::string, ChainExpr>> rels = dependence_relations(m);
        CHECK_FALSE(rels.empty());
        std::set<std::string> names;
        for (const auto& [name, rel] : rels) {
            CHECK(names.insert(name).second); // names are unique
            std::vector<Coeff> rhs(static_cast<std::size_t>(mc.critical_count(2)), 0);
            for (const auto& [face, coef] : rel.terms())
                rhs[static_cast<std::size_t>(crit_idx(mc, 2, face))] = coef;
            CHECK(solver.solve(rhs).has_value());
        }
    }
}

TEST_CASE("degree-2 classes decompose over the preferred basis") {
    for (int m : {5, 6}) {
        OrderedComplex C = model(m);
        GradientField F = reference_field(C, m);
        MorseComplex mc = build_morse_complex(F);
        Conf2Basis basis = conf2_basis(m);

        for (std::size_t i = 0; i < basis.two_basis.size(); ++i) {
            std::vector<Coeff> coords = class_in_basis(mc, basis, dual(basis.two_basis[i]));
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == (i == j ? 1 : 0));
        }

        // coboundaries decompose to zero
        ChainExpr db = coboundary_morse(mc, corner_edge_dual(m, 1, 2));
        for (Coeff c : class_in_basis(mc, basis, db)) CHECK(c == 0);

        // linearity on a dependent face plus a basis face
        if (!basis.two_dependent.empty()) {
            ChainExpr x = dual(basis.two_dependent[0]);
            ChainExpr y = dual(basis.two_basis[0]);
            std::vector<Coeff> cx = class_in_basis(mc, basis, x);
            std::vector<Coeff> cy = class_in_basis(mc, basis, y);
            std::vector<Coeff> cxy = class_in_basis(mc, basis, x + y);
            for (std::size_t j = 0; j < cxy.size(); ++j)
                CHECK(cxy[j] == checked_add(cx[j], cy[j]));
        }
    }
}

TEST_CASE("model requirements are enforced") {
    CHECK_THROWS_AS(complete_graph(1), contract_violation);
    CHECK_THROWS_AS(conf2_basis(3), contract_violation);
    OrderedComplex C3 = model(3);
    CHECK_THROWS_AS(reference_field(C3, 3), contract_violation);
    CHECK_THROWS_AS(corner_edge_dual(5, 4, 3), contract_violation); // excluded corner
}
