#ifndef DMORSE_CUP_HPP
#define DMORSE_CUP_HPP

/**
 * Cup products: the front-face/back-face product on ordered simplicial
 * cochains, its lift to the Morse cochain complex through the transfer
 * maps, ring tables over the named bases of the two-point complete-graph
 * model, and tensor powers of such a ring for zero-divisor cup-length
 * bounds on topological complexity.
 */

#include "dmorse/complex.hpp"
#include "dmorse/conf2.hpp"
#include "dmorse/morse.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dmorse {

/// Front-face/back-face cup product of two cochains over the ordered
/// complex K: on each term pair whose last and first vertices agree, the
/// concatenation contributes when it is a face of K.
ChainExpr simplicial_cup(const OrderedComplex& K, const ChainExpr& x, const ChainExpr& y);

/// Cup product on the Morse cochain complex: push both factors down to
/// simplicial cochains, multiply, and transfer back.  Both inputs must be
/// Morse cocycles; the output is again a Morse cocycle (checked).
ChainExpr morse_cup(const MorseComplex& mc, const ChainExpr& x, const ChainExpr& y);

/// Structure constants of the cohomology ring of a two-point complete-graph
/// model: the degree-1 basis of Conf2Basis, the degree-2 basis of critical
/// faces carried by two_basis, and every degree-(1,1) product expressed in
/// the degree-2 basis.  Products against degree 2 vanish for dimension
/// reasons and are not tabulated.
struct CohomologyRing {
    int m = 0;
    std::vector<std::string> one_names;
    std::vector<std::string> two_names;
    /// products[i][j] = coordinates of one[i] * one[j] over two_names.
    std::vector<std::vector<std::vector<Coeff>>> products;

    int one_rank() const { return static_cast<int>(one_names.size()); }
    int two_rank() const { return static_cast<int>(two_names.size()); }
    /// Top nonvanishing degree: 2 when degree-2 classes exist, else 1.
    int hdim() const { return two_rank() > 0 ? 2 : 1; }
};

/// Compute the ring table of the model behind mc in the given named basis.
CohomologyRing conf2_ring(const MorseComplex& mc, const Conf2Basis& basis);

/// Human-readable product matrix: a legend naming the degree-2 basis,
/// then an aligned grid with one row and column per degree-1 basis class.
std::string ring_table_text(const CohomologyRing& R);

/// Machine-readable table: {"basis":[names], "products":{"x,y":[coeffs]}}
/// listing the nonzero products only.
std::string ring_table_json(const CohomologyRing& R);

/// Element of the s-fold tensor power of a ring's cohomology.  Terms map a
/// per-slot list of (degree, basis index) — degree 0 entries are the unit —
/// to an integer coefficient; mod-2 elements keep coefficients in {0,1}.
struct TensorElt {
    int slots = 0;
    bool mod2 = false;
    std::map<std::vector<std::pair<int, int>>, Coeff> terms;

    bool zero() const { return terms.empty(); }
};

/// The unit 1 x ... x 1.
TensorElt tensor_unit(int slots, bool mod2);

/// A degree-1 class with the given coordinates placed in one slot, units
/// elsewhere.
TensorElt one_class_in_slot(const CohomologyRing& R, int slots, bool mod2, int slot,
                            const std::vector<Coeff>& coords);

TensorElt tensor_add(TensorElt a, const TensorElt& b);
TensorElt tensor_sub(TensorElt a, const TensorElt& b);

/// Product in the tensor-power ring: slotwise multiplication through the
/// ring table with the usual sign for moving odd factors past each other
/// (no signs mod 2).  Any slot pushed beyond the top degree vanishes.
TensorElt tensor_mul(const CohomologyRing& R, const TensorElt& a, const TensorElt& b);

/// Render a tensor element, e.g. "2 * [[3,3,4],[1,2,2]] (x) corner(2,4)".
std::string tensor_text(const CohomologyRing& R, const TensorElt& t);

/// Restriction of a tensor element along the diagonal: multiply the slots
/// of every term together in the ring and collect by total degree.
struct DiagClass {
    Coeff unit = 0;
    std::vector<Coeff> one;
    std::vector<Coeff> two;

    bool is_zero() const;
};

DiagClass diag_restriction(const CohomologyRing& R, const TensorElt& t);

/// Greedy zero-divisor cup-length bound: verify that every candidate
/// restricts to zero along the diagonal (contract error otherwise), then
/// multiply them in order, keeping each factor that leaves the running
/// product nonzero.  The count of kept factors is a certified lower bound
/// for the zero-divisor cup-length of the s-fold power.
struct ZclResult {
    int bound = 0;
    std::vector<int> used;  ///< indices of the candidates that were kept
    TensorElt product;      ///< the final nonzero product (unit if bound 0)
};

ZclResult zcl_lower_bound(const CohomologyRing& R, const std::vector<TensorElt>& candidates);

/// Ready-made zero-divisor candidates certifying the topological-complexity
/// bound of the s-fold model power: 2s factors built from two disjoint
/// anchored pairs for m >= 6, 2s factors from a mixed corner/anchored
/// quadruple over the integers for m = 5 (the single degree-2 class makes
/// the mod-2 products cancel), and s factors from two distinct corner
/// classes for m = 4.
struct ZclPlan {
    bool mod2 = true;
    std::vector<TensorElt> candidates;
    std::vector<std::string> names;  ///< parallel display names
};

ZclPlan zcl_plan(const CohomologyRing& R, int s);

} // namespace dmorse

#endif // DMORSE_CUP_HPP
