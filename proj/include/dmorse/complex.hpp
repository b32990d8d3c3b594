#ifndef DMORSE_COMPLEX_HPP
#define DMORSE_COMPLEX_HPP

/**
 * Finite ordered simplicial complexes.
 *
 * A complex is stored dimension by dimension; within each dimension the
 * faces are kept in dictionary order on their (strictly increasing) vertex
 * id sequences, and every face is addressed by its rank in that order.
 * Vertex ids are dense 0-based integers; a label table maps them back to
 * the user's names.  The linear order on vertex ids is semantically
 * meaningful: all pairing algorithms consume it.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmorse {

/// Dense 0-based vertex identifier.
using Vertex = int;

/// Coefficient type for all integral linear algebra.
using Coeff = long long;

/// Invalid input data (malformed text, non-complex face lists).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated.
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

/// Integer arithmetic left the range of Coeff.
class arithmetic_overflow : public std::runtime_error {
public:
    explicit arithmetic_overflow(const std::string& what) : std::runtime_error(what) {}
};

/// a + b with overflow detection.
Coeff checked_add(Coeff a, Coeff b);
/// a * b with overflow detection.
Coeff checked_mul(Coeff a, Coeff b);
/// -a with overflow detection.
Coeff checked_neg(Coeff a);

/**
 * An abstract simplex: a strictly increasing sequence of vertex ids.
 * The empty simplex (dimension -1) is representable but never stored in a
 * complex.
 */
class Simplex {
public:
    Simplex() = default;

    /// Vertices must already be strictly increasing; throws contract_violation otherwise.
    explicit Simplex(std::vector<Vertex> vertices);

    /// Sorts and validates; throws parse_error on repeated vertices.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    Vertex operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<Vertex>& vertices() const { return v_; }

    bool contains(Vertex v) const;
    /// Index of v in this simplex, or -1 when absent.
    int position_of(Vertex v) const;

    /// Face with the vertex at position i deleted.
    Simplex without_position(int i) const;
    /// Face with vertex v deleted; throws contract_violation when absent.
    Simplex without_vertex(Vertex v) const;
    /// Coface with v inserted, plus the position it lands in;
    /// throws contract_violation when v is already present.
    std::pair<Simplex, int> with_vertex(Vertex v) const;
    /// Position v would occupy if inserted (number of vertices smaller than v).
    int insertion_position(Vertex v) const;

    /// Total order: dimension first, then dictionary order on vertex ids.
    /// Within a fixed dimension this is plain dictionary order.
    std::strong_ordering operator<=>(const Simplex& other) const;
    bool operator==(const Simplex& other) const = default;

private:
    std::vector<Vertex> v_;
};

/// Dictionary-order comparison of two same-dimension simplices: -1, 0, +1.
/// Throws contract_violation when the dimensions differ.
int lex_compare(const Simplex& a, const Simplex& b);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

/**
 * Signed incidence number of alpha in the boundary of beta: (-1)^j when
 * alpha is obtained from beta by deleting the vertex at position j, and 0
 * when alpha is not a facet of beta.
 */
int incidence(const Simplex& alpha, const Simplex& beta);

/**
 * A homogeneous formal sum of simplices of one dimension with Coeff
 * coefficients.  Also used for cochains (coefficients of dual basis
 * elements).  Terms with coefficient zero are pruned.
 */
class ChainExpr {
public:
    ChainExpr() = default;
    explicit ChainExpr(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Coeff coeff(const Simplex& s) const;
    const std::map<Simplex, Coeff>& terms() const { return terms_; }

    /// Adds c * s; throws contract_violation on a dimension mismatch.
    void add_term(const Simplex& s, Coeff c);

    ChainExpr& operator+=(const ChainExpr& other);
    ChainExpr& operator-=(const ChainExpr& other);
    ChainExpr& operator*=(Coeff c);
    friend ChainExpr operator+(ChainExpr a, const ChainExpr& b) { a += b; return a; }
    friend ChainExpr operator-(ChainExpr a, const ChainExpr& b) { a -= b; return a; }
    friend ChainExpr operator*(Coeff c, ChainExpr a) { a *= c; return a; }
    bool operator==(const ChainExpr& other) const { return terms_ == other.terms_; }

    /// Reduce every coefficient mod 2 to {0,1}, pruning zeros.
    void reduce_mod2();

private:
    int dim_ = -1;
    std::map<Simplex, Coeff> terms_;
};

/**
 * A finite simplicial complex on linearly ordered vertices with ranked,
 * dictionary-ordered face lists per dimension and precomputed signed
 * facet/cofacet adjacency.
 */
class OrderedComplex {
public:
    /// Builds the downward closure of the given faces.  Vertex ids must be
    /// dense: every id in [0, max id] must occur in some face.
    static OrderedComplex from_maximal_faces(const std::vector<std::vector<Vertex>>& faces);

    /// Assigns display labels; size must equal vertex_count().
    void set_labels(std::vector<std::string> labels);
    const std::string& label(Vertex v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    /// Number of vertices (0-faces).
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    /// Dimension of the complex (-1 when empty).
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    /// Number of d-faces (0 for out-of-range d).
    int count(int d) const;
    long long total_faces() const;

    /// The rank-i face of dimension d (dictionary order within the dimension).
    const Simplex& face(int d, int i) const;
    /// Rank of s within its dimension, or -1 when s is not a face.
    int rank_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return rank_of(s) >= 0; }

    /// Signed facet ranks of the rank-i face of dimension d: (rank in d-1, sign).
    const std::vector<std::pair<int, int>>& facets(int d, int i) const;
    /// Signed cofacet ranks: (rank in d+1, sign).
    const std::vector<std::pair<int, int>>& cofacets(int d, int i) const;

    /// Boundary of a face as a signed sum of its facets.
    ChainExpr boundary(const Simplex& s) const;

    /// alpha with v inserted, provided v is absent and the result is a face.
    std::optional<Simplex> coface(const Simplex& alpha, Vertex v) const;
    /// As coface(), but additionally requires v to land at position r.
    std::optional<Simplex> coface_at(const Simplex& alpha, Vertex v, int r) const;

    /// Canonical JSON description (labels + faces per dimension).
    std::string to_json() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> faces_;                  // per dim, dictionary order
    std::unordered_map<Simplex, int, SimplexHash> rank_;       // face -> rank within its dim
    std::vector<std::vector<std::vector<std::pair<int, int>>>> facets_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> cofacets_;

    void index_faces();
};

/**
 * Rebuilds K with vertex v renamed to new_id_of[v] (a permutation of the
 * ids).  Labels follow their vertices.  Changing the linear order of the
 * vertices generally changes the gradient field built on the complex.
 */
OrderedComplex relabel(const OrderedComplex& K, const std::vector<Vertex>& new_id_of);

/**
 * Parses the plain-text complex format: one maximal face per line, vertices
 * separated by whitespace, '#' starts a comment.  Labels are ordered
 * numerically when all of them are decimal numbers and lexicographically
 * otherwise; the resulting order defines the vertex ids.
 */
OrderedComplex parse_complex_text(std::istream& in);
OrderedComplex parse_complex_file(const std::string& path);

/// Formats a simplex with labels, e.g. "[1,3,4]".
std::string format_simplex(const OrderedComplex& K, const Simplex& s);

/// Formats a chain/cochain as e.g. "[1,3] - [2,4] + 2*[1,2]" (term order is
/// the dictionary order of the underlying simplices; "0" when empty).
std::string format_chain(const OrderedComplex& K, const ChainExpr& z);

} // namespace dmorse

#endif // DMORSE_COMPLEX_HPP
