/**
 * Gradient field construction, verification, and the vertex-level
 * collapsibility conditions.
 */

#include "dmorse/gradient.hpp"

#include <algorithm>
#include <sstream>

namespace dmorse {

GradientField::GradientField(const OrderedComplex& K) : K_(&K) {
    up_.resize(static_cast<std::size_t>(K.dim() + 1));
    down_.resize(static_cast<std::size_t>(K.dim() + 1));
    for (int d = 0; d <= K.dim(); ++d) {
        up_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(K.count(d)), -1);
        down_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(K.count(d)), -1);
    }
}

void GradientField::add_pairing(int dim, int low_rank, int high_rank) {
    const Simplex& low = K_->face(dim, low_rank);        // bounds-checked
    const Simplex& high = K_->face(dim + 1, high_rank);
    if (incidence(low, high) == 0)
        throw contract_violation("pairing requires a facet relation");
    if (up_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(low_rank)] >= 0 ||
        down_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(low_rank)] >= 0 ||
        up_[static_cast<std::size_t>(dim + 1)][static_cast<std::size_t>(high_rank)] >= 0 ||
        down_[static_cast<std::size_t>(dim + 1)][static_cast<std::size_t>(high_rank)] >= 0)
        throw contract_violation("pairing touches an already matched cell");
    up_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(low_rank)] = high_rank;
    down_[static_cast<std::size_t>(dim + 1)][static_cast<std::size_t>(high_rank)] = low_rank;
    order_.push_back(Pairing{dim, low_rank, high_rank});
}

int GradientField::partner_up(int d, int i) const {
    K_->face(d, i); // bounds check
    return up_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

int GradientField::partner_down(int d, int i) const {
    K_->face(d, i); // bounds check
    return down_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

CellStatus GradientField::status(int d, int i) const {
    if (partner_up(d, i) >= 0) return CellStatus::Redundant;
    if (partner_down(d, i) >= 0) return CellStatus::Collapsible;
    return CellStatus::Critical;
}

std::vector<int> GradientField::critical(int d) const {
    std::vector<int> out;
    for (int i = 0; i < K_->count(d); ++i)
        if (is_critical(d, i)) out.push_back(i);
    return out;
}

int GradientField::critical_count(int d) const {
    return static_cast<int>(critical(d).size());
}

std::vector<Simplex> GradientField::critical_faces(int d) const {
    std::vector<Simplex> out;
    for (int i : critical(d)) out.push_back(K_->face(d, i));
    return out;
}

std::vector<int> GradientField::critical_vector() const {
    std::vector<int> out;
    for (int d = 0; d <= K_->dim(); ++d) out.push_back(critical_count(d));
    return out;
}

bool GradientField::same_pairings(const GradientField& other) const {
    std::vector<Pairing> a = order_, b = other.order_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

GradientField build_field_staged(const OrderedComplex& K) {
    GradientField F(K);
    const int d = K.dim();
    const int n = K.vertex_count();
    std::vector<std::vector<char>> avail(static_cast<std::size_t>(d + 1));
    for (int dd = 0; dd <= d; ++dd)
        avail[static_cast<std::size_t>(dd)].assign(static_cast<std::size_t>(K.count(dd)), 1);

    for (int i = d - 1; i >= 0; --i) {
        auto& lo = avail[static_cast<std::size_t>(i)];
        auto& hi = avail[static_cast<std::size_t>(i + 1)];
        for (int r = i + 1; r >= 0; --r) {
            for (Vertex v = n - 1; v >= 0; --v) {
                for (int a = 0; a < K.count(i); ++a) {
                    if (!lo[static_cast<std::size_t>(a)]) continue;
                    const Simplex& alpha = K.face(i, a);
                    auto beta = K.coface_at(alpha, v, r);
                    if (!beta) continue;
                    int b = K.rank_of(*beta);
                    if (!hi[static_cast<std::size_t>(b)]) continue;
                    F.add_pairing(i, a, b);
                    lo[static_cast<std::size_t>(a)] = 0;
                    hi[static_cast<std::size_t>(b)] = 0;
                }
            }
        }
    }
    return F;
}

GradientField build_field_fast(const OrderedComplex& K) {
    GradientField F(K);
    const int d = K.dim();
    const int n = K.vertex_count();
    std::vector<std::vector<char>> avail(static_cast<std::size_t>(d + 1));
    for (int dd = 0; dd <= d; ++dd)
        avail[static_cast<std::size_t>(dd)].assign(static_cast<std::size_t>(K.count(dd)), 1);

    for (int i = d - 1; i >= 0; --i) {
        auto& lo = avail[static_cast<std::size_t>(i)];
        auto& hi = avail[static_cast<std::size_t>(i + 1)];
        for (Vertex v = n - 1; v >= 0; --v) {
            for (int a = 0; a < K.count(i); ++a) {
                if (!lo[static_cast<std::size_t>(a)]) continue;
                const Simplex& alpha = K.face(i, a);
                auto beta = K.coface(alpha, v);
                if (!beta) continue;
                int b = K.rank_of(*beta);
                if (!hi[static_cast<std::size_t>(b)]) continue;
                F.add_pairing(i, a, b);
                lo[static_cast<std::size_t>(a)] = 0;
                hi[static_cast<std::size_t>(b)] = 0;
            }
        }
    }
    return F;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

AcyclicityReport verify_acyclic(const GradientField& F) {
    // A directed cycle of the modified Hasse diagram must alternate matched
    // up-edges and unmatched down-edges between two adjacent dimensions, so
    // it suffices to search, per dimension d, the digraph on redundant
    // d-faces with an edge g -> g' whenever g' != g is a facet of the
    // matched cofacet of g.
    const OrderedComplex& K = F.complex();
    AcyclicityReport rep;
    for (int d = 0; d < K.dim(); ++d) {
        const int nd = K.count(d);
        std::vector<char> color(static_cast<std::size_t>(nd), 0); // 0 white, 1 gray, 2 black
        for (int s = 0; s < nd; ++s) {
            if (color[static_cast<std::size_t>(s)] != 0 || F.partner_up(d, s) < 0) continue;
            // Iterative DFS with an explicit path for cycle reconstruction.
            std::vector<std::pair<int, std::size_t>> stack; // (node, next edge index)
            std::vector<int> path;
            stack.emplace_back(s, 0);
            while (!stack.empty()) {
                auto& [u, ei] = stack.back();
                if (ei == 0) {
                    color[static_cast<std::size_t>(u)] = 1;
                    path.push_back(u);
                }
                int b = F.partner_up(d, u);
                const auto& fac = K.facets(d + 1, b);
                bool descended = false;
                while (ei < fac.size()) {
                    int w = fac[ei++].first;
                    if (w == u || F.partner_up(d, w) < 0) continue;
                    char cw = color[static_cast<std::size_t>(w)];
                    if (cw == 1) {
                        // Found a cycle: path from w onward, alternating with
                        // the matched cofacets, closed back at w.
                        rep.acyclic = false;
                        auto it = std::find(path.begin(), path.end(), w);
                        for (; it != path.end(); ++it) {
                            rep.cycle.emplace_back(d, *it);
                            rep.cycle.emplace_back(d + 1, F.partner_up(d, *it));
                        }
                        rep.cycle.emplace_back(d, w);
                        return rep;
                    }
                    if (cw == 0) {
                        stack.emplace_back(w, 0);
                        descended = true;
                        break;
                    }
                }
                if (!descended && ei >= fac.size()) {
                    color[static_cast<std::size_t>(u)] = 2;
                    path.pop_back();
                    stack.pop_back();
                }
            }
        }
    }
    return rep;
}

MaximalityReport verify_maximality(const GradientField& F) {
    const OrderedComplex& K = F.complex();
    MaximalityReport rep;
    for (int d = 1; d <= K.dim(); ++d) {
        for (int i = 0; i < K.count(d); ++i) {
            if (!F.is_critical(d, i)) continue;
            for (const auto& [fr, sign] : K.facets(d, i)) {
                (void)sign;
                if (F.is_critical(d - 1, fr)) {
                    rep.maximal = false;
                    rep.dim = d;
                    rep.face_rank = i;
                    rep.facet_rank = fr;
                    return rep;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Vertex-level combinatorics
// ---------------------------------------------------------------------------

namespace {

/// The vertex of the cofacet beta that is absent from its facet base.
Vertex inserted_vertex(const Simplex& base, const Simplex& beta) {
    for (Vertex v : beta.vertices())
        if (!base.contains(v)) return v;
    throw contract_violation("cofacet does not extend the face");
}

} // namespace

std::optional<std::pair<Vertex, Simplex>> vertex_swap_up(const OrderedComplex& K,
                                                         const Simplex& alpha, int i) {
    const int k = alpha.dim();
    if (i < 0 || i > k) throw contract_violation("vertex position out of range");
    const Vertex w = alpha[i];
    const Simplex base = alpha.without_position(i);
    if (k == 0) {
        // The base is empty; swap candidates are all larger vertices.
        for (Vertex v = K.vertex_count() - 1; v > w; --v)
            if (K.contains(Simplex({v}))) return std::make_pair(v, Simplex({v}));
        return std::nullopt;
    }
    int base_rank = K.rank_of(base);
    if (base_rank < 0) throw contract_violation("face is not in the complex");
    Vertex best = -1;
    for (const auto& [cr, sign] : K.cofacets(k - 1, base_rank)) {
        (void)sign;
        const Simplex& beta = K.face(k, cr);
        Vertex v = inserted_vertex(base, beta);
        if (v > w) best = std::max(best, v);
    }
    if (best < 0) return std::nullopt;
    return std::make_pair(best, base.with_vertex(best).first);
}

bool is_maximal_vertex(const OrderedComplex& K, const Simplex& alpha, int i) {
    return !vertex_swap_up(K, alpha, i).has_value();
}

bool nonmaximal_vertices(const OrderedComplex& K, const Simplex& alpha,
                         const std::vector<Vertex>& vertices) {
    Simplex cur = alpha;
    for (Vertex w : vertices) {
        int i = cur.position_of(w);
        if (i < 0)
            throw contract_violation("sequence vertex is not in the current face");
        auto swapped = vertex_swap_up(K, cur, i);
        if (!swapped) return false;
        cur = std::move(swapped->second);
    }
    return true;
}

bool nonmaximal_positions(const OrderedComplex& K, const Simplex& alpha,
                          const std::vector<int>& positions) {
    std::vector<Vertex> vs;
    vs.reserve(positions.size());
    int prev = -1;
    for (int p : positions) {
        if (p <= prev || p > alpha.dim())
            throw contract_violation("positions must be strictly increasing and in range");
        prev = p;
        vs.push_back(alpha[p]);
    }
    return nonmaximal_vertices(K, alpha, vs);
}

bool tail_fully_nonmaximal(const OrderedComplex& K, const Simplex& alpha, int r) {
    const int k = alpha.dim();
    if (r < -1 || r > k) throw contract_violation("vertex position out of range");
    const int m = k - r;
    if (m > 20) throw contract_violation("tail too long to enumerate");
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<Vertex> vs;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) vs.push_back(alpha[r + 1 + j]);
        if (!nonmaximal_vertices(K, alpha, vs)) return false;
    }
    return true;
}

bool CollapsingOracle::is_collapsing_vertex(const Simplex& alpha, int r) {
    const OrderedComplex& K = F_->complex();
    const int k = alpha.dim();
    if (r < 0 || r > k) throw contract_violation("vertex position out of range");
    int a_rank = K.rank_of(alpha);
    if (a_rank < 0) throw contract_violation("face is not in the complex");

    const std::uint64_t key = (static_cast<std::uint64_t>(k) << 40) |
                              (static_cast<std::uint64_t>(a_rank) << 8) |
                              static_cast<std::uint64_t>(r);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
        if (it->second == 2)
            throw contract_violation("collapsing-vertex recursion re-entered a pending case");
        return it->second != 0;
    }
    memo_[key] = 2;

    bool result = F_->status(k, a_rank) != CellStatus::Redundant &&
                  tail_fully_nonmaximal(K, alpha, r);
    if (result) {
        const Vertex w = alpha[r];
        const Simplex base = alpha.without_position(r);
        // Each same-dimension extension of the base by a vertex above w must
        // contain a vertex of alpha, above the extension vertex, that is
        // collapsing in it.
        auto check_extension = [&](const Simplex& beta, Vertex v) {
            for (int j = alpha.dim(); j >= 0; --j) {
                Vertex aj = alpha[j];
                if (aj <= v) break;
                if (is_collapsing_vertex(beta, beta.position_of(aj))) return true;
            }
            return false;
        };
        if (k == 0) {
            for (Vertex v = K.vertex_count() - 1; v > w && result; --v)
                if (K.contains(Simplex({v})))
                    result = check_extension(Simplex({v}), v);
        } else {
            int base_rank = K.rank_of(base);
            for (const auto& [cr, sign] : K.cofacets(k - 1, base_rank)) {
                (void)sign;
                const Simplex& beta = K.face(k, cr);
                Vertex v = inserted_vertex(base, beta);
                if (v <= w) continue;
                if (!check_extension(beta, v)) {
                    result = false;
                    break;
                }
            }
        }
    }
    memo_[key] = result ? 1 : 0;
    return result;
}

bool is_collapsing_vertex(const GradientField& F, const Simplex& alpha, int r) {
    CollapsingOracle oracle(F);
    return oracle.is_collapsing_vertex(alpha, r);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string pairing_list_text(const GradientField& F) {
    const OrderedComplex& K = F.complex();
    std::ostringstream out;
    for (const Pairing& p : F.pairings())
        out << format_simplex(K, K.face(p.dim, p.low)) << " -> "
            << format_simplex(K, K.face(p.dim + 1, p.high)) << "\n";
    return out.str();
}

std::string hasse_graphviz(const GradientField& F) {
    const OrderedComplex& K = F.complex();
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int d = 0; d <= K.dim(); ++d) {
        for (int i = 0; i < K.count(d); ++i) {
            out << "  d" << d << "_" << i << " [label=\""
                << format_simplex(K, K.face(d, i)) << "\"";
            if (F.is_critical(d, i)) out << ", shape=box";
            out << "];\n";
        }
    }
    for (int d = 1; d <= K.dim(); ++d) {
        for (int i = 0; i < K.count(d); ++i) {
            for (const auto& [fr, sign] : K.facets(d, i)) {
                (void)sign;
                if (F.partner_down(d, i) == fr)
                    out << "  d" << (d - 1) << "_" << fr << " -> d" << d << "_" << i
                        << " [style=bold, color=blue];\n";
                else
                    out << "  d" << d << "_" << i << " -> d" << (d - 1) << "_" << fr << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace dmorse
