#ifndef DMORSE_GRADIENT_HPP
#define DMORSE_GRADIENT_HPP

/**
 * Discrete gradient fields on ordered complexes.
 *
 * A gradient field is an acyclic partial matching on the face poset: each
 * pairing joins a face (the redundant cell) with one of its cofacets (the
 * collapsible cell), no cell appears in two pairings, and reversing the
 * matched edges of the Hasse diagram leaves it free of directed cycles.
 * Unmatched cells are critical.
 *
 * Two constructions are provided.  build_field_staged sweeps dimensions
 * downward and, within each dimension, insertion positions downward, then
 * vertices downward, pairing available faces in dictionary order.
 * build_field_fast drops the position level and sweeps vertices directly;
 * it constructs the same set of pairings, generally in a different order.
 */

#include "dmorse/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmorse {

enum class CellStatus { Critical, Redundant, Collapsible };

/// One matched pair: the rank-`low` d-face with the rank-`high` (d+1)-face.
struct Pairing {
    int dim = -1;
    int low = -1;
    int high = -1;
    bool operator==(const Pairing&) const = default;
    auto operator<=>(const Pairing&) const = default;
};

class GradientField {
public:
    explicit GradientField(const OrderedComplex& K);

    const OrderedComplex& complex() const { return *K_; }

    /// Records low |-> high; validates the facet relation and that neither
    /// cell is already matched.
    void add_pairing(int dim, int low_rank, int high_rank);

    /// Rank of the matched cofacet of the rank-i d-face, or -1.
    int partner_up(int d, int i) const;
    /// Rank of the matched facet of the rank-i d-face, or -1.
    int partner_down(int d, int i) const;
    CellStatus status(int d, int i) const;
    bool is_critical(int d, int i) const { return status(d, i) == CellStatus::Critical; }

    /// Pairings in construction order.
    const std::vector<Pairing>& pairings() const { return order_; }
    /// Ranks of the critical d-faces in dictionary order.
    std::vector<int> critical(int d) const;
    int critical_count(int d) const;
    std::vector<Simplex> critical_faces(int d) const;
    /// Critical counts for dimensions 0..dim.
    std::vector<int> critical_vector() const;

    /// Set equality of pairings (construction order ignored).
    bool same_pairings(const GradientField& other) const;

private:
    const OrderedComplex* K_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<Pairing> order_;
};

GradientField build_field_staged(const OrderedComplex& K);
GradientField build_field_fast(const OrderedComplex& K);

struct AcyclicityReport {
    bool acyclic = true;
    /// When cyclic: a closed alternating walk as (dim, rank) cells, listed
    /// in walk order starting and ending at the same cell.
    std::vector<std::pair<int, int>> cycle;
};

/// Checks that reversing the matched Hasse edges creates no directed cycle.
AcyclicityReport verify_acyclic(const GradientField& F);

struct MaximalityReport {
    bool maximal = true;
    int dim = -1;       // dimension of the offending critical face
    int face_rank = -1; // its rank
    int facet_rank = -1;// rank of its critical facet
};

/// Checks that no critical face has a critical facet.
MaximalityReport verify_maximality(const GradientField& F);

// ---------------------------------------------------------------------------
// Vertex-level combinatorics: the local conditions that force pairings.
// ---------------------------------------------------------------------------

/// Is alpha[i] maximal in alpha, i.e. does no vertex v > alpha[i] give a
/// face (alpha - alpha[i]) + v of the same dimension?
bool is_maximal_vertex(const OrderedComplex& K, const Simplex& alpha, int i);

/// When alpha[i] is non-maximal: the largest such v together with the
/// swapped face (alpha - alpha[i]) + v.  nullopt when alpha[i] is maximal.
std::optional<std::pair<Vertex, Simplex>> vertex_swap_up(const OrderedComplex& K,
                                                         const Simplex& alpha, int i);

/// Iterated non-maximality: the vertices are tested in order, each against
/// the face produced by swapping out the previous one.
bool nonmaximal_vertices(const OrderedComplex& K, const Simplex& alpha,
                         const std::vector<Vertex>& vertices);

/// As above, with the vertices given by positions (strictly increasing) in alpha.
bool nonmaximal_positions(const OrderedComplex& K, const Simplex& alpha,
                          const std::vector<int>& positions);

/// Does every nonempty increasing sequence of positions from {r+1..dim}
/// give iterated non-maximal vertices in alpha?
bool tail_fully_nonmaximal(const OrderedComplex& K, const Simplex& alpha, int r);

/**
 * Memoized test of the recursive collapsing-vertex predicate against a
 * fixed gradient field: alpha[r] is collapsing in alpha when (i) alpha is
 * not redundant, (ii) the positions past r are fully non-maximal, and
 * (iii) every same-dimension face (alpha - alpha[r]) + v with v > alpha[r]
 * has a vertex of alpha above v that is collapsing in it.  When alpha[r]
 * is collapsing, the field pairs (alpha - alpha[r]) with alpha.
 */
class CollapsingOracle {
public:
    explicit CollapsingOracle(const GradientField& F) : F_(&F) {}
    bool is_collapsing_vertex(const Simplex& alpha, int r);

private:
    const GradientField* F_;
    std::unordered_map<std::uint64_t, std::int8_t> memo_; // 0 false, 1 true, 2 in progress
};

/// Convenience wrapper around a one-shot CollapsingOracle.
bool is_collapsing_vertex(const GradientField& F, const Simplex& alpha, int r);

/// One "low |-> high" line per pairing, construction order, labeled faces.
std::string pairing_list_text(const GradientField& F);

/// The modified Hasse diagram in Graphviz dot syntax (matched edges are
/// drawn upward, all other incidences downward; critical cells boxed).
std::string hasse_graphviz(const GradientField& F);

} // namespace dmorse

#endif // DMORSE_GRADIENT_HPP
