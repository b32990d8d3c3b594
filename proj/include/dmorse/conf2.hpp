#ifndef DMORSE_CONF2_HPP
#define DMORSE_CONF2_HPP

/**
 * Discrete model of the configuration space of two distinct points moving on
 * a finite simplicial complex, specialized to complete graphs.
 *
 * Faces of the model are two-row arrays over the base vertices: each row is
 * nondecreasing with support a face of the base complex, every column step
 * strictly increases at least one row, and no column is diagonal.  Columns
 * are ordered pairs (a,b), a != b, listed in lexicographic order, and the
 * model is an ordered complex on those pair vertices.
 *
 * For the complete graph on {1..m} this module additionally provides a
 * hand-built gradient field, its critical faces in closed form, explicit
 * cocycle bases for degree-1 cohomology, a preferred basis of the critical
 * 2-faces together with corrected cycles, and the dependence relations that
 * reduce arbitrary critical 2-faces to the preferred basis.
 */

#include "dmorse/complex.hpp"
#include "dmorse/gradient.hpp"
#include "dmorse/morse.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dmorse {

/// Complete graph on m vertices (labels "1".."m"), all edges, natural order.
OrderedComplex complete_graph(int m);

/// The two-point configuration model of an ordered complex K.  Vertices are
/// the ordered pairs of distinct vertices of K (labelled "(u,v)" from the
/// labels of K) in pair-lexicographic order; higher faces are the two-row
/// arrays described in the file header.  K must keep at least two vertices.
OrderedComplex two_point_model(const OrderedComplex& K);

/// Dense id of the pair vertex (a,b), 1 <= a,b <= m, a != b: pairs are
/// numbered in lexicographic order skipping the diagonal, so pair-lex order
/// equals integer order.
int pair_rank(int m, int a, int b);

/// Inverse of pair_rank.
std::pair<int, int> pair_unrank(int m, int r);

/// The model face with the given rows (entries in 1..m, complete-graph
/// model).  Throws contract_violation unless the rows describe a face:
/// nondecreasing rows with at most two distinct values each, at least one
/// strict increase per column step, and no diagonal column.
Simplex matrix_face(int m, const std::vector<int>& top, const std::vector<int>& bottom);

/// Render a face of the complete-graph model as its two-row array,
/// e.g. "[[1,1,3],[2,4,4]]".
std::string matrix_label(int m, const Simplex& s);

/// The hand-built gradient field on the model of the complete graph on m
/// vertices (m >= 4).  C must be two_point_model(complete_graph(m)).
GradientField reference_field(const OrderedComplex& C, int m);

/// Critical faces of the reference field by dimension, dictionary order.
/// Generated from the closed-form description, independent of any field.
std::vector<std::vector<Simplex>> reference_critical_faces(int m);

/// Closed-form critical counts (1, 2(m-2)^2 - 1, (m-1)(m-2)(m-3)(m-4)/4).
std::vector<long long> reference_critical_counts(int m);

/// Closed-form Euler characteristic m(m^3 - 10m^2 + 27m - 18)/4 of the model.
long long conf2_euler_characteristic(int m);

/// Closed-form Betti numbers of the model: (1, 7) for m = 4 and
/// (1, (m-1)(m-2), m(m-2)(m-3)(m-5)/4 + 1) for m >= 5.
std::vector<long long> conf2_reference_betti(int m);

/// Whether (a,b) indexes a corner edge: the critical edges of the reference
/// field with columns (a,b),(m-1,m), i.e. a,b < m, a != b, (a,b) != (m-1,m-2).
bool corner_domain(int m, int a, int b);

/// Dual cochain of the corner edge [[a,m-1],[b,m]].
ChainExpr corner_edge_dual(int m, int a, int b);

/// Corner cocycle: the region-wise integer combination of corner edge duals
/// indexed by (a,b) that closes the corner dual into a cocycle of the Morse
/// complex.  Defined exactly on corner_domain; unitriangular over the corner
/// edge duals in lexicographic order of (a,b).
ChainExpr corner_cocycle(int m, int a, int b);

/// Dual of the critical edge [[m,m],[b,d]] (b < d < m-1): the first point
/// sits anchored at the last vertex.  Already a Morse cocycle.
ChainExpr anchored_first_dual(int m, int b, int d);

/// Dual of the critical edge [[a,c],[m,m]] (a < c < m-1): the second point
/// sits anchored at the last vertex.  Already a Morse cocycle.
ChainExpr anchored_second_dual(int m, int a, int c);

/// Named bases for the cohomology of the complete-graph model.
///
/// Degree 1 (one_cocycles, in order): the corner cocycles listed in
/// `corner`, then the anchored-first duals, then the anchored-second duals;
/// (m-1)(m-2) elements for m >= 5, and 7 for m = 4 (every corner index, the
/// degree-2 part being empty there).
///
/// Degree 2: `two_basis` carries the critical 2-faces whose duals descend to
/// a basis of degree-2 cohomology; `two_dependent` carries the remaining
/// critical 2-faces, those expressible through the dependence relations.
struct Conf2Basis {
    int m = 0;
    std::vector<std::pair<int, int>> corner;          ///< (a,b) corner indices
    std::vector<std::pair<int, int>> first_anchored;  ///< (b,d), b < d < m-1
    std::vector<std::pair<int, int>> second_anchored; ///< (a,c), a < c < m-1
    std::vector<ChainExpr> one_cocycles;              ///< degree-1 basis, in order
    std::vector<std::string> one_names;               ///< parallel display names
    std::vector<Simplex> two_basis;                   ///< dictionary order
    std::vector<Simplex> two_dependent;               ///< dictionary order
};

Conf2Basis conf2_basis(int m);

/// For each member of two_basis (same order), the cycle of the Morse
/// boundary obtained by correcting that 2-face with faces from
/// two_dependent.  The corrected cycles form a basis of the kernel of the
/// Morse boundary in degree 2.
std::vector<ChainExpr> corrected_two_cycles(int m);

/// The dependence relations among critical 2-faces: each entry is a named
/// degree-2 Morse cochain (left side minus right side of one relation
/// instance) that lies in the image of the degree-1 Morse coboundary.
std::vector<std::pair<std::string, ChainExpr>> dependence_relations(int m);

/// Coordinates of a degree-2 Morse cochain's cohomology class in the dual
/// basis carried by two_basis.  mc must be the Morse complex of the
/// reference field on the model for basis.m.  Throws contract_violation
/// when the support of z is not critical or the decomposition fails.
std::vector<Coeff> class_in_basis(const MorseComplex& mc, const Conf2Basis& basis,
                                  const ChainExpr& z);

} // namespace dmorse

#endif // DMORSE_CONF2_HPP
