#ifndef DMORSE_TESTS_FIXTURES_HPP
#define DMORSE_TESTS_FIXTURES_HPP

/**
 * Shared test fixtures: the bundled surface triangulations, a seeded
 * generator of small random 2-complexes, and deliberately naive
 * re-implementations of the gradient-path sums used as oracles against
 * the memoized versions.
 */

#include "dmorse/complex.hpp"
#include "dmorse/gradient.hpp"
#include "dmorse/morse.hpp"

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dmorse::testing {

inline std::string data_path(const std::string& name) {
    return std::string(DMORSE_DATA_DIR) + "/" + name;
}

inline OrderedComplex rp2() { return parse_complex_file(data_path("rp2.txt")); }
inline OrderedComplex torus() { return parse_complex_file(data_path("torus.txt")); }
inline OrderedComplex punctured_rp2() {
    return parse_complex_file(data_path("rp2_punctured.txt"));
}

/// A cochain/chain from (coefficient, vertex list) pairs.
inline ChainExpr expr(int dim,
                      std::initializer_list<std::pair<Coeff, std::vector<Vertex>>> terms) {
    ChainExpr z(dim);
    for (const auto& [c, vs] : terms) z.add_term(Simplex::from_unsorted(vs), c);
    return z;
}

/// Random complex of dimension <= 2 with all vertex ids present.  The
/// parameter caps keep the face count small enough for brute-force oracles.
inline OrderedComplex random_complex(std::mt19937& rng, int max_vertices, int max_triangles,
                                     int max_edges) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> vtx(0, n - 1);
    std::uniform_int_distribution<int> nt(0, max_triangles);
    std::uniform_int_distribution<int> ne(0, max_edges);

    std::vector<std::vector<Vertex>> faces;
    for (Vertex v = 0; v < n; ++v) faces.push_back({v});
    const int triangles = nt(rng);
    for (int t = 0; t < triangles; ++t) {
        Vertex a = vtx(rng), b = vtx(rng), c = vtx(rng);
        if (a == b || a == c || b == c) continue;
        faces.push_back({a, b, c});
    }
    const int edges = ne(rng);
    for (int e = 0; e < edges; ++e) {
        Vertex a = vtx(rng), b = vtx(rng);
        if (a == b) continue;
        faces.push_back({a, b});
    }
    std::vector<std::vector<Vertex>> sorted;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        sorted.push_back(std::move(f));
    }
    return OrderedComplex::from_maximal_faces(sorted);
}

/// Ascending-path sum evaluated by explicit depth-first enumeration: every
/// arrival at `target` contributes the accumulated product of step weights.
inline Coeff brute_upper_paths(const GradientField& F, int d, int from, int target) {
    const OrderedComplex& K = F.complex();
    Coeff total = 0;
    std::function<void(int, Coeff)> walk = [&](int g, Coeff w) {
        if (g == target) total = checked_add(total, w);
        int b = F.partner_up(d, g);
        if (b < 0) return;
        int sign_g = incidence(K.face(d, g), K.face(d + 1, b));
        for (const auto& [fr, sign_f] : K.facets(d + 1, b)) {
            if (fr == g) continue;
            walk(fr, checked_mul(w, static_cast<Coeff>(-sign_g * sign_f)));
        }
    };
    walk(from, 1);
    return total;
}

/// Descending-path sum by explicit enumeration (see brute_upper_paths).
inline Coeff brute_lower_paths(const GradientField& F, int d, int from, int target) {
    const OrderedComplex& K = F.complex();
    Coeff total = 0;
    std::function<void(int, Coeff)> walk = [&](int g, Coeff w) {
        if (g == target) total = checked_add(total, w);
        if (d == 0) return;
        for (const auto& [er, sign_e] : K.facets(d, g)) {
            int b = F.partner_up(d - 1, er);
            if (b < 0 || b == g) continue;
            int sign_b = incidence(K.face(d - 1, er), K.face(d, b));
            walk(b, checked_mul(w, static_cast<Coeff>(-sign_e * sign_b)));
        }
    };
    walk(from, 1);
    return total;
}

/// Morse boundary entry by explicit enumeration: signed facet step off
/// `beta`, then an ascending path into `alpha`.
inline Coeff brute_mixed_paths(const GradientField& F, const Simplex& beta,
                               const Simplex& alpha) {
    const OrderedComplex& K = F.complex();
    const int d = alpha.dim();
    const int br = K.rank_of(beta);
    const int ar = K.rank_of(alpha);
    Coeff total = 0;
    for (const auto& [fr, sign_f] : K.facets(d + 1, br))
        total = checked_add(
            total, checked_mul(static_cast<Coeff>(sign_f), brute_upper_paths(F, d, fr, ar)));
    return total;
}

} // namespace dmorse::testing

#endif // DMORSE_TESTS_FIXTURES_HPP
