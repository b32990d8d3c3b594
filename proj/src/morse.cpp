/**
 * Morse complex assembly, gradient path sums, and homology.
 */

#include "dmorse/morse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace dmorse {

int MorseComplex::critical_count(int d) const {
    if (d < 0 || d >= static_cast<int>(critical.size())) return 0;
    return static_cast<int>(critical[static_cast<std::size_t>(d)].size());
}

const Simplex& MorseComplex::critical_face(int d, int idx) const {
    return K->face(d, critical[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)]);
}

int MorseComplex::crit_index(int d, int face_rank) const {
    if (d < 0 || d >= static_cast<int>(critical.size())) return -1;
    const auto& list = critical[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(list.begin(), list.end(), face_rank);
    if (it == list.end() || *it != face_rank) return -1;
    return static_cast<int>(it - list.begin());
}

IntMatrix MorseComplex::coboundary(int p) const {
    if (p + 1 >= static_cast<int>(boundary.size()))
        return IntMatrix(critical_count(p + 1), critical_count(p)); // zero map
    return boundary[static_cast<std::size_t>(p + 1)].transpose();
}

long long MorseComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < critical.size(); ++d) {
        long long c = static_cast<long long>(critical[d].size());
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

// ---------------------------------------------------------------------------
// Path sums
// ---------------------------------------------------------------------------

namespace {

/**
 * Memoized evaluation of sums over ascending gradient paths ending at the
 * fixed d-face `target`.  From a redundant face g with matched cofacet B,
 * a path steps to any other facet g' of B with weight -[g:B]*[g':B]; the
 * empty path at the target contributes 1.
 */
class UpperPathSolver {
public:
    UpperPathSolver(const GradientField& F, int d, int target)
        : F_(F), K_(F.complex()), d_(d), target_(target),
          state_(static_cast<std::size_t>(K_.count(d)), 0),
          value_(static_cast<std::size_t>(K_.count(d)), 0) {}

    Coeff eval(int g) {
        auto gi = static_cast<std::size_t>(g);
        if (state_[gi] == 2) return value_[gi];
        if (state_[gi] == 1)
            throw contract_violation("gradient paths revisit a face; the field is not acyclic");
        state_[gi] = 1;
        Coeff acc = (g == target_) ? 1 : 0;
        int b = F_.partner_up(d_, g);
        if (b >= 0) {
            const Simplex& B = K_.face(d_ + 1, b);
            int sign_g = incidence(K_.face(d_, g), B);
            for (const auto& [fr, sign_f] : K_.facets(d_ + 1, b)) {
                if (fr == g) continue;
                Coeff w = checked_mul(static_cast<Coeff>(-sign_g), static_cast<Coeff>(sign_f));
                acc = checked_add(acc, checked_mul(w, eval(fr)));
            }
        }
        state_[gi] = 2;
        value_[gi] = acc;
        return acc;
    }

private:
    const GradientField& F_;
    const OrderedComplex& K_;
    int d_;
    int target_;
    std::vector<char> state_;   // 0 unseen, 1 in progress, 2 done
    std::vector<Coeff> value_;
};

/**
 * Memoized evaluation of sums over descending gradient paths ending at the
 * fixed d-face `target`.  From a face g, a path steps through any facet e
 * that is matched with a d-face B != g, with weight -[e:g]*[e:B].
 */
class LowerPathSolver {
public:
    LowerPathSolver(const GradientField& F, int d, int target)
        : F_(F), K_(F.complex()), d_(d), target_(target),
          state_(static_cast<std::size_t>(K_.count(d)), 0),
          value_(static_cast<std::size_t>(K_.count(d)), 0) {}

    Coeff eval(int g) {
        auto gi = static_cast<std::size_t>(g);
        if (state_[gi] == 2) return value_[gi];
        if (state_[gi] == 1)
            throw contract_violation("gradient paths revisit a face; the field is not acyclic");
        state_[gi] = 1;
        Coeff acc = (g == target_) ? 1 : 0;
        if (d_ > 0) {
            for (const auto& [er, sign_e] : K_.facets(d_, g)) {
                int b = F_.partner_up(d_ - 1, er);
                if (b < 0 || b == g) continue;
                int sign_b = incidence(K_.face(d_ - 1, er), K_.face(d_, b));
                Coeff w = checked_mul(static_cast<Coeff>(-sign_e), static_cast<Coeff>(sign_b));
                acc = checked_add(acc, checked_mul(w, eval(b)));
            }
        }
        state_[gi] = 2;
        value_[gi] = acc;
        return acc;
    }

private:
    const GradientField& F_;
    const OrderedComplex& K_;
    int d_;
    int target_;
    std::vector<char> state_;
    std::vector<Coeff> value_;
};

} // namespace

std::vector<Coeff> upper_path_table(const GradientField& F, int d, int target) {
    const OrderedComplex& K = F.complex();
    K.face(d, target); // bounds check
    UpperPathSolver solver(F, d, target);
    std::vector<Coeff> table(static_cast<std::size_t>(K.count(d)), 0);
    for (int g = 0; g < K.count(d); ++g) table[static_cast<std::size_t>(g)] = solver.eval(g);
    return table;
}

std::vector<Coeff> lower_path_table(const GradientField& F, int d, int target) {
    const OrderedComplex& K = F.complex();
    K.face(d, target); // bounds check
    LowerPathSolver solver(F, d, target);
    std::vector<Coeff> table(static_cast<std::size_t>(K.count(d)), 0);
    for (int g = 0; g < K.count(d); ++g) table[static_cast<std::size_t>(g)] = solver.eval(g);
    return table;
}

Coeff upper_path_sum(const GradientField& F, const Simplex& from, const Simplex& to) {
    const OrderedComplex& K = F.complex();
    if (from.dim() != to.dim())
        throw contract_violation("path endpoints must have equal dimension");
    int fr = K.rank_of(from), tr = K.rank_of(to);
    if (fr < 0 || tr < 0) throw contract_violation("path endpoint is not in the complex");
    UpperPathSolver solver(F, from.dim(), tr);
    return solver.eval(fr);
}

Coeff lower_path_sum(const GradientField& F, const Simplex& from, const Simplex& to) {
    const OrderedComplex& K = F.complex();
    if (from.dim() != to.dim())
        throw contract_violation("path endpoints must have equal dimension");
    int fr = K.rank_of(from), tr = K.rank_of(to);
    if (fr < 0 || tr < 0) throw contract_violation("path endpoint is not in the complex");
    LowerPathSolver solver(F, from.dim(), tr);
    return solver.eval(fr);
}

Coeff mixed_path_sum(const GradientField& F, const Simplex& beta, const Simplex& alpha) {
    const OrderedComplex& K = F.complex();
    if (beta.dim() != alpha.dim() + 1)
        throw contract_violation("mixed path endpoints must differ by one dimension");
    int br = K.rank_of(beta), ar = K.rank_of(alpha);
    if (br < 0 || ar < 0) throw contract_violation("path endpoint is not in the complex");
    UpperPathSolver solver(F, alpha.dim(), ar);
    Coeff acc = 0;
    for (const auto& [fr, sign] : K.facets(beta.dim(), br))
        acc = checked_add(acc, checked_mul(static_cast<Coeff>(sign), solver.eval(fr)));
    return acc;
}

// ---------------------------------------------------------------------------
// Morse complex assembly
// ---------------------------------------------------------------------------

MorseComplex build_morse_complex(const GradientField& F) {
    const OrderedComplex& K = F.complex();
    MorseComplex mc;
    mc.K = &K;
    mc.F = &F;
    mc.critical.resize(static_cast<std::size_t>(K.dim() + 1));
    for (int d = 0; d <= K.dim(); ++d)
        mc.critical[static_cast<std::size_t>(d)] = F.critical(d);

    mc.boundary.resize(static_cast<std::size_t>(K.dim() + 1));
    if (K.dim() >= 0)
        mc.boundary[0] = IntMatrix(0, mc.critical_count(0));
    for (int p = 1; p <= K.dim(); ++p) {
        const auto& rows = mc.critical[static_cast<std::size_t>(p - 1)];
        const auto& cols = mc.critical[static_cast<std::size_t>(p)];
        IntMatrix D(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        // One ascending-path table per target critical (p-1)-face fills the
        // corresponding row across all critical p-faces.
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            UpperPathSolver solver(F, p - 1, rows[ri]);
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                Coeff acc = 0;
                for (const auto& [fr, sign] : K.facets(p, cols[ci]))
                    acc = checked_add(acc, checked_mul(static_cast<Coeff>(sign), solver.eval(fr)));
                D.at(static_cast<int>(ri), static_cast<int>(ci)) = acc;
            }
        }
        mc.boundary[static_cast<std::size_t>(p)] = std::move(D);
    }
    return mc;
}

// ---------------------------------------------------------------------------
// Cochain maps
// ---------------------------------------------------------------------------

ChainExpr phi_up(const MorseComplex& mc, const ChainExpr& x) {
    if (x.zero()) return x;
    const OrderedComplex& K = *mc.K;
    const int d = x.dim();
    ChainExpr out(d);
    for (const auto& [alpha, c] : x.terms()) {
        int ar = K.rank_of(alpha);
        if (ar < 0 || mc.crit_index(d, ar) < 0)
            throw contract_violation("phi_up requires a cochain supported on critical faces");
        std::vector<Coeff> table = upper_path_table(*mc.F, d, ar);
        for (int g = 0; g < K.count(d); ++g) {
            Coeff t = table[static_cast<std::size_t>(g)];
            if (t != 0) out.add_term(K.face(d, g), checked_mul(c, t));
        }
    }
    return out;
}

ChainExpr phi_down(const MorseComplex& mc, const ChainExpr& z) {
    if (z.zero()) return z;
    const OrderedComplex& K = *mc.K;
    const GradientField& F = *mc.F;
    const int d = z.dim();

    // L(g) accumulates z along descending paths starting at g; evaluated by
    // memoized recursion through matched facets.
    std::vector<char> state(static_cast<std::size_t>(K.count(d)), 0);
    std::vector<Coeff> value(static_cast<std::size_t>(K.count(d)), 0);
    std::function<Coeff(int)> eval = [&](int g) -> Coeff {
        auto gi = static_cast<std::size_t>(g);
        if (state[gi] == 2) return value[gi];
        if (state[gi] == 1)
            throw contract_violation("gradient paths revisit a face; the field is not acyclic");
        state[gi] = 1;
        Coeff acc = z.coeff(K.face(d, g));
        if (d > 0) {
            for (const auto& [er, sign_e] : K.facets(d, g)) {
                int b = F.partner_up(d - 1, er);
                if (b < 0 || b == g) continue;
                int sign_b = incidence(K.face(d - 1, er), K.face(d, b));
                Coeff w = checked_mul(static_cast<Coeff>(-sign_e), static_cast<Coeff>(sign_b));
                acc = checked_add(acc, checked_mul(w, eval(b)));
            }
        }
        state[gi] = 2;
        value[gi] = acc;
        return acc;
    };

    ChainExpr out(d);
    for (int rank : mc.critical[static_cast<std::size_t>(d)]) {
        Coeff c = eval(rank);
        if (c != 0) out.add_term(K.face(d, rank), c);
    }
    return out;
}

ChainExpr coboundary_simplicial(const OrderedComplex& K, const ChainExpr& x) {
    const int d = x.dim();
    ChainExpr out(d + 1);
    if (x.zero() || d + 1 > K.dim()) return out;
    for (const auto& [s, c] : x.terms()) {
        int r = K.rank_of(s);
        if (r < 0) throw contract_violation("cochain term is not a face of the complex");
        for (const auto& [cr, sign] : K.cofacets(d, r))
            out.add_term(K.face(d + 1, cr), checked_mul(c, static_cast<Coeff>(sign)));
    }
    return out;
}

ChainExpr coboundary_morse(const MorseComplex& mc, const ChainExpr& x) {
    const OrderedComplex& K = *mc.K;
    const int d = x.dim();
    ChainExpr out(d + 1);
    if (x.zero()) return out;
    for (const auto& [s, c] : x.terms()) {
        (void)c;
        if (mc.crit_index(d, K.rank_of(s)) < 0)
            throw contract_violation("Morse cochain has support off the critical faces");
    }
    if (d + 1 > K.dim()) return out;
    const IntMatrix& D = mc.boundary[static_cast<std::size_t>(d + 1)];
    for (int col = 0; col < D.cols; ++col) {
        Coeff acc = 0;
        for (int row = 0; row < D.rows; ++row) {
            Coeff xr = x.coeff(mc.critical_face(d, row));
            if (xr != 0) acc = checked_add(acc, checked_mul(xr, D.at(row, col)));
        }
        if (acc != 0) out.add_term(mc.critical_face(d + 1, col), acc);
    }
    return out;
}

bool is_morse_cocycle(const MorseComplex& mc, const ChainExpr& x) {
    return coboundary_morse(mc, x).zero();
}

IntMatrix boundary_matrix(const OrderedComplex& K, int p) {
    IntMatrix D(K.count(p - 1), K.count(p));
    if (p < 1 || p > K.dim()) return D;
    for (int i = 0; i < K.count(p); ++i)
        for (const auto& [fr, sign] : K.facets(p, i))
            D.at(fr, i) = sign;
    return D;
}

bool is_simplicial_coboundary(const OrderedComplex& K, const ChainExpr& x) {
    const int d = x.dim();
    if (x.zero()) return true;
    if (d < 1) return false;
    // x = coboundary(y) for a (d-1)-cochain y means x, as a vector over the
    // d-faces, lies in the integer column span of the transposed boundary.
    IntMatrix A = boundary_matrix(K, d).transpose(); // rows: d-faces, cols: (d-1)-faces
    std::vector<Coeff> b(static_cast<std::size_t>(K.count(d)), 0);
    for (const auto& [s, c] : x.terms()) {
        int r = K.rank_of(s);
        if (r < 0) throw contract_violation("cochain term is not a face of the complex");
        b[static_cast<std::size_t>(r)] = c;
    }
    return solve_integer(A, b).has_value();
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

bool BettiProfile::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

namespace {

BettiProfile homology_from_matrices(const std::vector<IntMatrix>& D,
                                    const std::vector<long long>& counts) {
    // D[p] maps p-chains to (p-1)-chains; counts[p] = number of p-cells.
    const int top = static_cast<int>(counts.size()) - 1;
    BettiProfile out;
    out.betti.assign(static_cast<std::size_t>(top + 1), 0);
    out.torsion.assign(static_cast<std::size_t>(top + 1), {});
    std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
    std::vector<std::vector<Coeff>> tor(static_cast<std::size_t>(top + 2));
    for (int p = 1; p <= top; ++p) {
        SmithResult snf = smith_normal_form(D[static_cast<std::size_t>(p)], false);
        rank[static_cast<std::size_t>(p)] = snf.rank;
        for (Coeff f : snf.invariant_factors)
            if (f > 1) tor[static_cast<std::size_t>(p)].push_back(f);
    }
    for (int p = 0; p <= top; ++p) {
        out.betti[static_cast<std::size_t>(p)] =
            counts[static_cast<std::size_t>(p)] - rank[static_cast<std::size_t>(p)] -
            rank[static_cast<std::size_t>(p + 1)];
        out.torsion[static_cast<std::size_t>(p)] = tor[static_cast<std::size_t>(p + 1)];
    }
    return out;
}

} // namespace

BettiProfile homology(const MorseComplex& mc) {
    std::vector<long long> counts;
    for (std::size_t d = 0; d < mc.critical.size(); ++d)
        counts.push_back(static_cast<long long>(mc.critical[d].size()));
    return homology_from_matrices(mc.boundary, counts);
}

BettiProfile homology(const OrderedComplex& K) {
    std::vector<IntMatrix> D(static_cast<std::size_t>(K.dim() + 1));
    std::vector<long long> counts;
    for (int p = 0; p <= K.dim(); ++p) {
        counts.push_back(K.count(p));
        if (p >= 1) D[static_cast<std::size_t>(p)] = boundary_matrix(K, p);
    }
    return homology_from_matrices(D, counts);
}

std::vector<long long> betti_mod_p(const MorseComplex& mc, Coeff p) {
    const int top = static_cast<int>(mc.critical.size()) - 1;
    std::vector<long long> betti(static_cast<std::size_t>(top + 1), 0);
    std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
    for (int q = 1; q <= top; ++q)
        rank[static_cast<std::size_t>(q)] = rank_mod_p(mc.boundary[static_cast<std::size_t>(q)], p);
    for (int q = 0; q <= top; ++q)
        betti[static_cast<std::size_t>(q)] = mc.critical_count(q) -
                                             rank[static_cast<std::size_t>(q)] -
                                             rank[static_cast<std::size_t>(q + 1)];
    return betti;
}

long long euler_characteristic(const OrderedComplex& K) {
    long long chi = 0;
    for (int d = 0; d <= K.dim(); ++d)
        chi += (d % 2 == 0) ? K.count(d) : -K.count(d);
    return chi;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string matrix_triplets(const MorseComplex& mc) {
    std::ostringstream out;
    for (std::size_t p = 1; p < mc.boundary.size(); ++p) {
        const IntMatrix& D = mc.boundary[p];
        for (int r = 0; r < D.rows; ++r)
            for (int c = 0; c < D.cols; ++c)
                if (D.at(r, c) != 0)
                    out << p << " " << r << " " << c << " " << D.at(r, c) << "\n";
    }
    return out.str();
}

std::string betti_json(const BettiProfile& b) {
    nlohmann::ordered_json j;
    j["betti"] = b.betti;
    auto tor = nlohmann::ordered_json::array();
    for (const auto& t : b.torsion) {
        auto level = nlohmann::ordered_json::array();
        for (Coeff f : t) level.push_back(std::to_string(f));
        tor.push_back(std::move(level));
    }
    j["torsion"] = std::move(tor);
    return j.dump(2);
}

} // namespace dmorse
