#include "dmorse/conf2.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dmorse {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw contract_violation(what);
}

/// Shape test for the critical 2-faces [[a,a,c],[b,d,d]] of the reference
/// field: both rows strictly increase within the graph, the middle column
/// differs from its neighbours in both rows, and no column is diagonal.
bool critical_two(int m, int a, int b, int c, int d) {
    return 1 <= a && a < c && c < m && 1 <= b && b < d && d < m &&
           b != c && a != b && a != d && c != d;
}

} // namespace

OrderedComplex complete_graph(int m) {
    require(m >= 2, "complete_graph: two distinct points need at least two vertices");
    std::vector<std::vector<Vertex>> faces;
    for (Vertex u = 0; u < m; ++u) {
        faces.push_back({u});
        for (Vertex v = u + 1; v < m; ++v) faces.push_back({u, v});
    }
    OrderedComplex K = OrderedComplex::from_maximal_faces(faces);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int v = 1; v <= m; ++v) labels.push_back(std::to_string(v));
    K.set_labels(std::move(labels));
    return K;
}

OrderedComplex two_point_model(const OrderedComplex& K) {
    const int n = K.vertex_count();
    require(n >= 2, "two_point_model: the base complex needs at least two vertices");
    auto pair_id = [n](Vertex u, Vertex v) { return u * (n - 1) + v - (v > u ? 1 : 0); };

    // Depth-first column extension.  The state carries the column list and
    // the two row supports (strictly increasing, so appending the last entry
    // is the only way a support can grow); each candidate column is accepted
    // when both grown supports stay faces of K.
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> cols;
    std::vector<Vertex> top;
    std::vector<Vertex> bottom;
    auto support_ok = [&K](const std::vector<Vertex>& sup, Vertex extra) {
        std::vector<Vertex> grown = sup;
        grown.push_back(extra);
        return K.contains(Simplex(std::move(grown)));
    };
    std::function<void(Vertex, Vertex)> extend = [&](Vertex u, Vertex v) {
        faces.push_back(cols);
        for (Vertex u2 = u; u2 < n; ++u2) {
            bool grow_top = (u2 > u);
            if (grow_top && !support_ok(top, u2)) continue;
            for (Vertex v2 = (u2 == u ? v + 1 : v); v2 < n; ++v2) {
                if (v2 == u2) continue;
                bool grow_bottom = (v2 > v);
                if (grow_bottom && !support_ok(bottom, v2)) continue;
                cols.push_back(pair_id(u2, v2));
                if (grow_top) top.push_back(u2);
                if (grow_bottom) bottom.push_back(v2);
                extend(u2, v2);
                if (grow_bottom) bottom.pop_back();
                if (grow_top) top.pop_back();
                cols.pop_back();
            }
        }
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            cols = {pair_id(u, v)};
            top = {u};
            bottom = {v};
            extend(u, v);
        }

    OrderedComplex C = OrderedComplex::from_maximal_faces(faces);
    std::vector<std::string> labels(static_cast<std::size_t>(n * (n - 1)));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v)
                labels[static_cast<std::size_t>(pair_id(u, v))] =
                    "(" + K.label(u) + "," + K.label(v) + ")";
    C.set_labels(std::move(labels));
    return C;
}

int pair_rank(int m, int a, int b) {
    require(1 <= a && a <= m && 1 <= b && b <= m && a != b,
            "pair_rank: need distinct entries in 1..m");
    return (a - 1) * (m - 1) + (b - 1) - (b > a ? 1 : 0);
}

std::pair<int, int> pair_unrank(int m, int r) {
    require(0 <= r && r < m * (m - 1), "pair_unrank: id out of range");
    int a = r / (m - 1) + 1;
    int off = r % (m - 1) + 1;
    int b = off < a ? off : off + 1;
    return {a, b};
}

Simplex matrix_face(int m, const std::vector<int>& top, const std::vector<int>& bottom) {
    require(m >= 2, "matrix_face: m must be at least 2");
    require(!top.empty() && top.size() == bottom.size(),
            "matrix_face: rows must be nonempty and equally long");
    std::set<int> top_support(top.begin(), top.end());
    std::set<int> bottom_support(bottom.begin(), bottom.end());
    require(top_support.size() <= 2 && bottom_support.size() <= 2,
            "matrix_face: a row over a graph uses at most two values");
    std::vector<Vertex> cols;
    cols.reserve(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) {
        require(1 <= top[i] && top[i] <= m && 1 <= bottom[i] && bottom[i] <= m,
                "matrix_face: entries must lie in 1..m");
        require(top[i] != bottom[i], "matrix_face: diagonal column");
        if (i > 0) {
            require(top[i] >= top[i - 1] && bottom[i] >= bottom[i - 1],
                    "matrix_face: rows must be nondecreasing");
            require(top[i] > top[i - 1] || bottom[i] > bottom[i - 1],
                    "matrix_face: repeated column");
        }
        cols.push_back(pair_rank(m, top[i], bottom[i]));
    }
    return Simplex(std::move(cols));
}

std::string matrix_label(int m, const Simplex& s) {
    std::string top = "[";
    std::string bottom = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto [a, b] = pair_unrank(m, s[static_cast<int>(i)]);
        if (i > 0) {
            top += ",";
            bottom += ",";
        }
        top += std::to_string(a);
        bottom += std::to_string(b);
    }
    return "[" + top + "]," + bottom + "]]";
}

GradientField reference_field(const OrderedComplex& C, int m) {
    require(m >= 4, "reference_field: m must be at least 4");
    require(C.vertex_count() == m * (m - 1),
            "reference_field: complex is not the complete-graph model for this m");
    GradientField F(C);
    auto id = [&](int a, int b) { return pair_rank(m, a, b); };
    auto face_rank = [&](std::vector<Vertex> cols) {
        int r = C.rank_of(Simplex::from_unsorted(std::move(cols)));
        require(r >= 0, "reference_field: expected face missing from the model");
        return r;
    };

    // Dimension 0: every vertex except (m,m-1) moves.  A vertex with second
    // entry m slides its first entry toward m-1; everything else appends the
    // column (m,m-1).
    for (int a = 1; a <= m; ++a) {
        for (int b = 1; b <= m; ++b) {
            if (a == b || (a == m && b == m - 1)) continue;
            int low = face_rank({id(a, b)});
            int high;
            if (a == m - 1 && b == m)
                high = face_rank({id(m - 1, m - 2), id(m - 1, m)});
            else if (b == m)
                high = face_rank({id(a, m), id(m - 1, m)});
            else
                high = face_rank({id(a, b), id(m, m - 1)});
            F.add_pairing(0, low, high);
        }
    }

    // Dimension 1: classify each edge by its two-row shape.  Edges that are
    // the upper end of a vertex pairing or critical are skipped; every other
    // edge inserts one column.
    for (int i = 0; i < C.count(1); ++i) {
        const Simplex& e = C.face(1, i);
        auto [a, b] = pair_unrank(m, e[0]);
        auto [c, d] = pair_unrank(m, e[1]);
        if (a == c) {
            // Top row constant (b < d).
            if (a < m && d < m)
                F.add_pairing(1, i, face_rank({e[0], e[1], id(m, d)}));
            else if (a < m - 1 && d == m)
                F.add_pairing(1, i, face_rank({e[0], e[1], id(m - 1, m)}));
            // a == m-1, d == m: critical corner edge when b < m-2, the upper
            // end of the vertex (m-1,m) when b == m-2.
            // a == m: critical anchored edge when d < m-1, the upper end of
            // the vertex (m,b) when d == m-1.
        } else if (b == d) {
            // Bottom row constant (a < c).
            if (c < m && b < m)
                F.add_pairing(1, i, face_rank({e[0], e[1], id(c, m)}));
            else if (c == m && b < m - 1)
                F.add_pairing(1, i, face_rank({e[0], e[1], id(m, m - 1)}));
            // b == m: critical anchored edge when c < m-1, the upper end of
            // the vertex (a,m) when c == m-1.
            // c == m, b == m-1: the upper end of the vertex (a,m-1).
        } else {
            // Both rows strict (a < c, b < d).
            if (c == m && d == m - 1) continue;     // upper end of (a,b)
            if (c == m - 1 && d == m) continue;     // critical corner edge
            if (b != c && ((c < m && d < m) || (c == m && d < m - 1)))
                F.add_pairing(1, i, face_rank({e[0], id(c, b), e[1]}));
            else if (a != d && ((b == c && c < m && d < m) || (c < m - 1 && d == m)))
                F.add_pairing(1, i, face_rank({e[0], id(a, d), e[1]}));
            else
                require(false, "reference_field: unclassified edge");
        }
    }
    return F;
}

std::vector<std::vector<Simplex>> reference_critical_faces(int m) {
    require(m >= 4, "reference_critical_faces: m must be at least 4");
    std::vector<std::vector<Simplex>> crit(3);
    crit[0].push_back(Simplex({pair_rank(m, m, m - 1)}));
    for (int a = 1; a < m; ++a)
        for (int b = 1; b < m; ++b)
            if (corner_domain(m, a, b))
                crit[1].push_back(matrix_face(m, {a, m - 1}, {b, m}));
    for (int b = 1; b < m - 1; ++b)
        for (int d = b + 1; d < m - 1; ++d)
            crit[1].push_back(matrix_face(m, {m, m}, {b, d}));
    for (int a = 1; a < m - 1; ++a)
        for (int c = a + 1; c < m - 1; ++c)
            crit[1].push_back(matrix_face(m, {a, c}, {m, m}));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            for (int c = 1; c <= m; ++c)
                for (int d = 1; d <= m; ++d)
                    if (critical_two(m, a, b, c, d))
                        crit[2].push_back(matrix_face(m, {a, a, c}, {b, d, d}));
    for (auto& list : crit) std::sort(list.begin(), list.end());
    return crit;
}

std::vector<long long> reference_critical_counts(int m) {
    require(m >= 4, "reference_critical_counts: m must be at least 4");
    long long mm = m;
    return {1, 2 * (mm - 2) * (mm - 2) - 1, (mm - 1) * (mm - 2) * (mm - 3) * (mm - 4) / 4};
}

long long conf2_euler_characteristic(int m) {
    require(m >= 4, "conf2_euler_characteristic: m must be at least 4");
    long long mm = m;
    return mm * (mm * mm * mm - 10 * mm * mm + 27 * mm - 18) / 4;
}

std::vector<long long> conf2_reference_betti(int m) {
    require(m >= 4, "conf2_reference_betti: m must be at least 4");
    long long mm = m;
    if (m == 4) return {1, 7};
    return {1, (mm - 1) * (mm - 2), mm * (mm - 2) * (mm - 3) * (mm - 5) / 4 + 1};
}

bool corner_domain(int m, int a, int b) {
    return 1 <= a && a < m && 1 <= b && b < m && a != b && !(a == m - 1 && b == m - 2);
}

ChainExpr corner_edge_dual(int m, int a, int b) {
    require(m >= 4 && corner_domain(m, a, b), "corner_edge_dual: index outside the corner domain");
    ChainExpr x(1);
    x.add_term(matrix_face(m, {a, m - 1}, {b, m}), 1);
    return x;
}

ChainExpr corner_cocycle(int m, int a, int b) {
    require(m >= 4 && corner_domain(m, a, b), "corner_cocycle: index outside the corner domain");
    ChainExpr x(1);
    auto add = [&](int i, int j) { x += corner_edge_dual(m, i, j); };
    auto sub = [&](int i, int j) { x -= corner_edge_dual(m, i, j); };
    if (a == 3 && b == 2) {
        // The six mutual small-index duals.
        add(3, 2); add(3, 1); add(2, 3); add(2, 1); add(1, 3); add(1, 2);
    } else if (a == m - 1 && b == m - 3) {
        add(a, b);
        for (int i = 1; i <= m - 2; ++i)
            for (int j = 1; j <= m - 2; ++j)
                if (i != j && j != m - 3) sub(i, j);
    } else if (a == m - 2 && b == m - 1) {
        add(a, b);
        for (int i = 1; i <= m - 3; ++i)
            for (int j = 1; j <= m - 2; ++j)
                if (i != j) sub(i, j);
    } else if (a <= 2 || (b == m - 1 && a <= m - 3) || (a == 3 && b == 1)) {
        for (int j = 1; j <= b; ++j)
            if (j != a) add(a, j);
    } else if (b == 1 || (a == m - 1 && b <= m - 4)) {
        for (int i = 1; i <= a; ++i)
            if (i != b) add(i, b);
    } else if (b == 2) {
        // 4 <= a <= m-2.
        for (int i = 1; i <= a; ++i)
            if (i != 2) add(i, 2);
        for (int i = 1; i < a; ++i) add(i, a);
    } else {
        // 3 <= a, b <= m-2, a != b.
        for (int i = 1; i <= a; ++i)
            for (int j = 1; j <= b; ++j)
                if (i != j && j != a) add(i, j);
        for (int i = 1; i < a; ++i) add(i, a);
    }
    return x;
}

ChainExpr anchored_first_dual(int m, int b, int d) {
    require(m >= 4 && 1 <= b && b < d && d < m - 1,
            "anchored_first_dual: need 1 <= b < d < m-1");
    ChainExpr x(1);
    x.add_term(matrix_face(m, {m, m}, {b, d}), 1);
    return x;
}

ChainExpr anchored_second_dual(int m, int a, int c) {
    require(m >= 4 && 1 <= a && a < c && c < m - 1,
            "anchored_second_dual: need 1 <= a < c < m-1");
    ChainExpr x(1);
    x.add_term(matrix_face(m, {a, c}, {m, m}), 1);
    return x;
}

Conf2Basis conf2_basis(int m) {
    require(m >= 4, "conf2_basis: m must be at least 4");
    Conf2Basis B;
    B.m = m;
    if (m == 4) {
        // Degree-2 cohomology is empty and the degree-1 rank equals the
        // full critical-edge count, so every corner index joins the basis.
        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b)
                if (corner_domain(m, a, b)) B.corner.emplace_back(a, b);
    } else {
        for (int b = 1; b <= m - 3; ++b) B.corner.emplace_back(m - 1, b);
        for (int a = 1; a <= m - 2; ++a) B.corner.emplace_back(a, m - 1);
        B.corner.emplace_back(m - 2, m - 3);
    }
    for (int b = 1; b < m - 1; ++b)
        for (int d = b + 1; d < m - 1; ++d) B.first_anchored.emplace_back(b, d);
    for (int a = 1; a < m - 1; ++a)
        for (int c = a + 1; c < m - 1; ++c) B.second_anchored.emplace_back(a, c);

    for (auto [a, b] : B.corner) {
        B.one_cocycles.push_back(corner_cocycle(m, a, b));
        B.one_names.push_back("corner(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (auto [b, d] : B.first_anchored) {
        B.one_cocycles.push_back(anchored_first_dual(m, b, d));
        B.one_names.push_back("first(" + std::to_string(b) + "," + std::to_string(d) + ")");
    }
    for (auto [a, c] : B.second_anchored) {
        B.one_cocycles.push_back(anchored_second_dual(m, a, c));
        B.one_names.push_back("second(" + std::to_string(a) + "," + std::to_string(c) + ")");
    }

    std::set<Simplex> dependent;
    for (int c = 3; c < m; ++c)
        for (int d = 3; d < m; ++d)
            if (c != d) dependent.insert(matrix_face(m, {1, 1, c}, {2, d, d}));
    for (int d = 4; d < m; ++d) dependent.insert(matrix_face(m, {1, 1, 2}, {3, d, d}));
    for (int c = 4; c < m; ++c) dependent.insert(matrix_face(m, {2, 2, c}, {1, 3, 3}));
    if (m >= 5) dependent.insert(matrix_face(m, {2, 2, 3}, {1, 4, 4}));

    const std::vector<std::vector<Simplex>> crit = reference_critical_faces(m);
    for (const Simplex& s : crit[2]) {
        if (dependent.count(s))
            B.two_dependent.push_back(s);
        else
            B.two_basis.push_back(s);
    }
    require(B.two_dependent.size() == dependent.size(),
            "conf2_basis: a dependent face is not critical");
    return B;
}

std::vector<ChainExpr> corrected_two_cycles(int m) {
    require(m >= 5, "corrected_two_cycles: m must be at least 5");
    Conf2Basis B = conf2_basis(m);
    std::set<Simplex> dependent(B.two_dependent.begin(), B.two_dependent.end());
    std::vector<ChainExpr> out;
    out.reserve(B.two_basis.size());
    for (const Simplex& s : B.two_basis) {
        auto [a, b] = pair_unrank(m, s[0]);
        auto [a2, d] = pair_unrank(m, s[1]);
        auto [c, d2] = pair_unrank(m, s[2]);
        require(a2 == a && d2 == d, "corrected_two_cycles: unexpected critical 2-face shape");
        ChainExpr n(2);
        auto term = [&](Coeff sign, int ta, int tb, int tc, int td) {
            Simplex f = matrix_face(m, {ta, ta, tc}, {tb, td, td});
            if (!(ta == a && tb == b && tc == c && td == d))
                require(dependent.count(f) > 0,
                        "corrected_two_cycles: correction term outside the dependent faces");
            n.add_term(f, sign);
        };
        term(+1, a, b, c, d);
        if (a == 1 && c >= 3) {
            require(b >= 3, "corrected_two_cycles: unexpected leader");
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, b);
        } else if (a == 1) {
            require(c == 2 && b >= 4, "corrected_two_cycles: unexpected leader");
            term(-1, 1, 3, 2, d); term(+1, 1, 3, 2, b);
        } else if (a == 2 && b == 1 && c >= 4) {
            require(d >= 4, "corrected_two_cycles: unexpected leader");
            term(-1, 2, 1, c, 3); term(+1, 1, 3, 2, d);
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, 3);
        } else if (a == 2 && b == 1) {
            require(c == 3 && d >= 5, "corrected_two_cycles: unexpected leader");
            term(-1, 2, 1, 3, 4); term(+1, 1, 3, 2, d); term(-1, 1, 3, 2, 4);
            term(+1, 1, 2, 3, 4); term(-1, 1, 2, 3, d);
        } else if (a == 2 && b == 3) {
            term(+1, 1, 3, 2, d); term(-1, 1, 2, c, d); term(+1, 1, 2, c, 3);
        } else if (a == 2) {
            require(b >= 4, "corrected_two_cycles: unexpected leader");
            term(-1, 1, 3, 2, b); term(+1, 1, 3, 2, d);
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, b);
        } else if (a == 3 && b == 1 && d == 2) {
            term(+1, 2, 1, 3, 4); term(-1, 2, 1, c, 3); term(+1, 1, 3, 2, 4);
            term(-1, 1, 2, 3, 4); term(+1, 1, 2, c, 3);
        } else if (a == 3 && b == 1 && d == 4) {
            term(+1, 2, 1, 3, 4); term(-1, 2, 1, c, 3); term(+1, 1, 3, 2, 4);
            term(-1, 1, 2, c, 4); term(+1, 1, 2, c, 3);
        } else if (a == 3 && b == 1) {
            require(d >= 5, "corrected_two_cycles: unexpected leader");
            term(+1, 2, 1, 3, 4); term(-1, 2, 1, c, 3); term(+1, 1, 3, 2, 4);
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, 3);
            term(-1, 1, 2, 3, 4); term(+1, 1, 2, 3, d);
        } else if (a == 3 && b == 2) {
            term(-1, 1, 2, c, d); term(+1, 1, 2, 3, d);
        } else if (a == 3) {
            require(b >= 4, "corrected_two_cycles: unexpected leader");
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, b);
            term(-1, 1, 2, 3, b); term(+1, 1, 2, 3, d);
        } else if (b == 1 && d == 2) {
            term(-1, 1, 2, a, 3); term(+1, 1, 2, c, 3);
            term(-1, 2, 1, c, 3); term(+1, 2, 1, a, 3);
        } else if (b == 1 && d == 3) {
            term(-1, 2, 1, c, 3); term(+1, 2, 1, a, 3);
        } else if (b == 1) {
            require(d >= 4, "corrected_two_cycles: unexpected leader");
            term(-1, 2, 1, c, 3); term(+1, 2, 1, a, 3);
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, 3);
            term(-1, 1, 2, a, 3); term(+1, 1, 2, a, d);
        } else if (b == 2) {
            term(-1, 1, 2, c, d); term(+1, 1, 2, a, d);
        } else {
            require(b >= 3, "corrected_two_cycles: unexpected leader");
            term(-1, 1, 2, c, d); term(+1, 1, 2, c, b);
            term(-1, 1, 2, a, b); term(+1, 1, 2, a, d);
        }
        out.push_back(n);
    }
    return out;
}

std::vector<std::pair<std::string, ChainExpr>> dependence_relations(int m) {
    require(m >= 5, "dependence_relations: m must be at least 5");
    std::vector<std::pair<std::string, ChainExpr>> out;
    auto add = [&](ChainExpr& z, Coeff sign, int a, int b, int c, int d) {
        if (critical_two(m, a, b, c, d)) z.add_term(matrix_face(m, {a, a, c}, {b, d, d}), sign);
    };

    // Family 1: swap the roles of the two top values against anchor (2,3).
    for (int c = 4; c < m; ++c) {
        ChainExpr z(2);
        for (int x = 1; x <= m; ++x) {
            add(z, +1, x, 2, c, 3);
            add(z, -1, c, 2, x, 3);
        }
        for (int w : {1, 3})
            for (int y = 1; y <= m; ++y) {
                if (y == 3) continue;
                for (int x = 1; x <= m; ++x) {
                    add(z, -1, x, w, c, y);
                    add(z, +1, c, w, x, y);
                }
            }
        out.emplace_back("E1[c=" + std::to_string(c) + "]", z);
    }

    // Family 2: the same swap for top value 3 against anchor (2,4).
    {
        ChainExpr z(2);
        for (int x = 1; x <= m; ++x) {
            add(z, +1, x, 2, 3, 4);
            add(z, -1, 3, 2, x, 4);
        }
        for (int w : {1, 4})
            for (int y = 1; y <= m; ++y) {
                if (y == 4) continue;
                for (int x = 1; x <= m; ++x) {
                    add(z, -1, x, w, 3, y);
                    add(z, +1, 3, w, x, y);
                }
            }
        out.emplace_back("E2", z);
    }

    // Family 3: generic top swap with both bottom anchors free.
    for (int c = 3; c < m; ++c)
        for (int d = 4; d < m; ++d) {
            if (c == d || (c == 3 && d == 4)) continue;
            ChainExpr z(2);
            for (int x = 1; x <= m; ++x)
                for (int y = 1; y <= m; ++y) {
                    add(z, +1, x, y, c, d);
                    add(z, -1, c, y, x, d);
                    add(z, -1, x, d, c, y);
                    add(z, +1, c, d, x, y);
                }
            out.emplace_back("E3[c=" + std::to_string(c) + ",d=" + std::to_string(d) + "]", z);
        }

    // Family 4: top value 2 against bottom anchor 4, with the exceptional
    // face [[2,2,3],[1,4,4]] removed and compensated through top value 3.
    {
        ChainExpr z(2);
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= m; ++y) {
                add(z, +1, x, y, 2, 4);
                if (!(x == 3 && y == 1)) add(z, -1, 2, y, x, 4);
                add(z, -1, x, 4, 2, y);
                add(z, +1, 2, 4, x, y);
                if (y > 4) add(z, +1, x, 1, 3, y);
                add(z, -1, 3, 1, x, y);
            }
        out.emplace_back("E4", z);
    }

    // Family 5: top value 2 against the remaining bottom anchors.
    for (int d = 5; d < m; ++d) {
        ChainExpr z(2);
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= m; ++y) {
                add(z, +1, x, y, 2, d);
                add(z, -1, 2, y, x, d);
                add(z, -1, x, d, 2, y);
                add(z, +1, 2, d, x, y);
            }
        out.emplace_back("E5[d=" + std::to_string(d) + "]", z);
    }

    // Family 6: faces whose bottom-left entry is 1 balance under the swap.
    for (int c = 3; c < m; ++c) {
        ChainExpr z(2);
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= m; ++y) {
                add(z, +1, x, 1, c, y);
                add(z, -1, c, 1, x, y);
            }
        out.emplace_back("E6[c=" + std::to_string(c) + "]", z);
    }
    return out;
}

std::vector<Coeff> class_in_basis(const MorseComplex& mc, const Conf2Basis& basis,
                                  const ChainExpr& z) {
    require(mc.K != nullptr, "class_in_basis: empty Morse complex");
    const int c2 = mc.critical_count(2);
    require(static_cast<int>(basis.two_basis.size() + basis.two_dependent.size()) == c2,
            "class_in_basis: basis does not match the Morse complex");
    std::vector<Coeff> rhs(static_cast<std::size_t>(c2), 0);
    if (!z.zero()) {
        require(z.dim() == 2, "class_in_basis: cochain degree must be 2");
        for (const auto& [s, coef] : z.terms()) {
            int rank = mc.K->rank_of(s);
            int idx = rank >= 0 ? mc.crit_index(2, rank) : -1;
            require(idx >= 0, "class_in_basis: support face is not a critical 2-face");
            rhs[static_cast<std::size_t>(idx)] = coef;
        }
    }
    const int nb = static_cast<int>(basis.two_basis.size());
    IntMatrix D = mc.coboundary(1);
    IntMatrix M(c2, nb + D.cols);
    for (int j = 0; j < nb; ++j) {
        int rank = mc.K->rank_of(basis.two_basis[j]);
        int idx = rank >= 0 ? mc.crit_index(2, rank) : -1;
        require(idx >= 0, "class_in_basis: basis face is not critical in this complex");
        M.at(idx, j) = 1;
    }
    for (int r = 0; r < c2; ++r)
        for (int c = 0; c < D.cols; ++c) M.at(r, nb + c) = D.at(r, c);
    auto sol = solve_integer(M, rhs);
    require(sol.has_value(), "class_in_basis: class does not decompose over the basis");
    return std::vector<Coeff>(sol->begin(), sol->begin() + nb);
}

} // namespace dmorse
