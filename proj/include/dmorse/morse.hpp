#ifndef DMORSE_MORSE_HPP
#define DMORSE_MORSE_HPP

/**
 * The Morse (co)chain complex of a gradient field.
 *
 * Gradient paths between same-dimension faces alternate an ascent into a
 * matched cofacet with a descent onto one of its other facets; each such
 * elementary zig-zag carries the weight -[g:B]*[g':B] (signed incidence
 * numbers), and a path's weight is the product of its steps.  Path sums
 * are evaluated by memoized recursion, which terminates because the
 * modified Hasse diagram is acyclic.
 *
 * The boundary operator of the Morse complex evaluates, per critical
 * p-face A and critical (p-1)-face g, the signed sum over the facets of A
 * of all gradient paths down to g.  Cochains are written in the dual
 * basis; the coboundary is the transpose.  phi_up carries a Morse cochain
 * to the simplicial cochain spreading each critical face along ascending
 * paths; phi_down projects a simplicial cochain back onto critical faces
 * along descending paths.  phi_down(phi_up(x)) == x holds exactly, and
 * both maps commute with the coboundaries.
 */

#include "dmorse/complex.hpp"
#include "dmorse/gradient.hpp"
#include "dmorse/snf.hpp"

#include <string>
#include <vector>

namespace dmorse {

struct MorseComplex {
    const OrderedComplex* K = nullptr;
    const GradientField* F = nullptr;
    /// Ranks of the critical faces per dimension, dictionary order.
    std::vector<std::vector<int>> critical;
    /// boundary[p] maps critical p-faces (columns) to critical (p-1)-faces
    /// (rows); boundary[0] is the empty 0 x c_0 matrix.
    std::vector<IntMatrix> boundary;

    int critical_count(int d) const;
    const Simplex& critical_face(int d, int idx) const;
    /// Index of a critical face inside critical[d], or -1.
    int crit_index(int d, int face_rank) const;
    /// Coboundary matrix from degree p to p+1 (transpose of boundary[p+1]).
    IntMatrix coboundary(int p) const;
    /// Alternating sum of critical counts.
    long long euler_characteristic() const;
};

MorseComplex build_morse_complex(const GradientField& F);

/// Weighted sum over ascending gradient paths from every d-face to the
/// rank-`target` d-face: table[r] = sum over paths from face r to target.
std::vector<Coeff> upper_path_table(const GradientField& F, int d, int target);

/// Weighted sum over descending gradient paths from every d-face to the
/// rank-`target` d-face (paths descend onto a matched facet's partner).
std::vector<Coeff> lower_path_table(const GradientField& F, int d, int target);

/// Sum over ascending paths between two d-faces.
Coeff upper_path_sum(const GradientField& F, const Simplex& from, const Simplex& to);
/// Sum over descending paths between two d-faces.
Coeff lower_path_sum(const GradientField& F, const Simplex& from, const Simplex& to);
/// Signed sum, over the facets g of beta, of ascending paths g -> alpha:
/// the entry of the Morse boundary when beta and alpha are critical.
Coeff mixed_path_sum(const GradientField& F, const Simplex& beta, const Simplex& alpha);

/// Morse cochain (supported on critical faces) -> simplicial cochain.
ChainExpr phi_up(const MorseComplex& mc, const ChainExpr& x);
/// Simplicial cochain -> Morse cochain.
ChainExpr phi_down(const MorseComplex& mc, const ChainExpr& z);

/// Simplicial coboundary of a cochain.
ChainExpr coboundary_simplicial(const OrderedComplex& K, const ChainExpr& x);
/// Morse coboundary of a Morse cochain.
ChainExpr coboundary_morse(const MorseComplex& mc, const ChainExpr& x);
bool is_morse_cocycle(const MorseComplex& mc, const ChainExpr& x);
/// Does an integer simplicial cochain y with coboundary(y) == x exist?
bool is_simplicial_coboundary(const OrderedComplex& K, const ChainExpr& x);

/// Full simplicial boundary matrix from p-faces to (p-1)-faces.
IntMatrix boundary_matrix(const OrderedComplex& K, int p);

struct BettiProfile {
    std::vector<long long> betti;
    /// torsion[p]: invariant factors > 1 of the degree-p homology group.
    std::vector<std::vector<Coeff>> torsion;
    bool torsion_free() const;
};

/// Integral homology from the Morse boundary matrices.
BettiProfile homology(const MorseComplex& mc);
/// Integral homology from the full simplicial chain complex.
BettiProfile homology(const OrderedComplex& K);
/// Betti numbers over the field with p elements.
std::vector<long long> betti_mod_p(const MorseComplex& mc, Coeff p);

long long euler_characteristic(const OrderedComplex& K);

/// "p row col value" lines for all nonzero Morse boundary entries.
std::string matrix_triplets(const MorseComplex& mc);
/// {"betti": [...], "torsion": [[...]]} (torsion as decimal strings).
std::string betti_json(const BettiProfile& b);

} // namespace dmorse

#endif // DMORSE_MORSE_HPP
