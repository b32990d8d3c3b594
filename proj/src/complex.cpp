/**
 * Ordered simplicial complexes: construction, ranking, adjacency, parsing.
 */

#include "dmorse/complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace dmorse {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow("integer overflow in addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow("integer overflow in multiplication");
    return r;
}

Coeff checked_neg(Coeff a) {
    Coeff r;
    if (__builtin_sub_overflow(static_cast<Coeff>(0), a, &r))
        throw arithmetic_overflow("integer overflow in negation");
    return r;
}

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    for (std::size_t i = 0; i + 1 < v_.size(); ++i)
        if (v_[i] >= v_[i + 1])
            throw contract_violation("simplex vertices must be strictly increasing");
    if (!v_.empty() && v_.front() < 0)
        throw contract_violation("vertex ids must be non-negative");
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw parse_error("face lists a vertex twice");
    return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

int Simplex::position_of(Vertex v) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it == v_.end() || *it != v) return -1;
    return static_cast<int>(it - v_.begin());
}

Simplex Simplex::without_position(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= v_.size())
        throw contract_violation("vertex position out of range");
    std::vector<Vertex> w;
    w.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
        if (static_cast<int>(j) != i) w.push_back(v_[j]);
    return Simplex(std::move(w));
}

Simplex Simplex::without_vertex(Vertex v) const {
    int p = position_of(v);
    if (p < 0) throw contract_violation("vertex is not in the simplex");
    return without_position(p);
}

int Simplex::insertion_position(Vertex v) const {
    return static_cast<int>(std::lower_bound(v_.begin(), v_.end(), v) - v_.begin());
}

std::pair<Simplex, int> Simplex::with_vertex(Vertex v) const {
    if (contains(v)) throw contract_violation("vertex is already in the simplex");
    int p = insertion_position(v);
    std::vector<Vertex> w;
    w.reserve(v_.size() + 1);
    w.insert(w.end(), v_.begin(), v_.begin() + p);
    w.push_back(v);
    w.insert(w.end(), v_.begin() + p, v_.end());
    return {Simplex(std::move(w)), p};
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
    if (v_.size() != other.v_.size())
        return v_.size() <=> other.v_.size();
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != other.v_[i]) return v_[i] <=> other.v_[i];
    return std::strong_ordering::equal;
}

int lex_compare(const Simplex& a, const Simplex& b) {
    if (a.dim() != b.dim())
        throw contract_violation("lex_compare requires equal dimensions");
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

int incidence(const Simplex& alpha, const Simplex& beta) {
    if (alpha.dim() + 1 != beta.dim())
        throw contract_violation("incidence expects dimensions differing by one");
    // beta must equal alpha with one extra vertex.
    int extra = -1;
    std::size_t i = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (i < alpha.size() && alpha.vertices()[i] == beta.vertices()[j]) {
            ++i;
        } else if (extra < 0) {
            extra = static_cast<int>(j);
        } else {
            return 0;
        }
    }
    if (i != alpha.size()) return 0;
    if (extra < 0) return 0;
    return (extra % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// ChainExpr
// ---------------------------------------------------------------------------

Coeff ChainExpr::coeff(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

void ChainExpr::add_term(const Simplex& s, Coeff c) {
    if (c == 0) return;
    if (dim_ < 0 && terms_.empty()) dim_ = s.dim();
    if (s.dim() != dim_)
        throw contract_violation("chain term has the wrong dimension");
    auto [it, inserted] = terms_.try_emplace(s, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

ChainExpr& ChainExpr::operator+=(const ChainExpr& other) {
    for (const auto& [s, c] : other.terms_) add_term(s, c);
    return *this;
}

ChainExpr& ChainExpr::operator-=(const ChainExpr& other) {
    for (const auto& [s, c] : other.terms_) add_term(s, checked_neg(c));
    return *this;
}

ChainExpr& ChainExpr::operator*=(Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) v = checked_mul(v, c);
    return *this;
}

void ChainExpr::reduce_mod2() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        Coeff r = ((it->second % 2) + 2) % 2;
        if (r == 0) {
            it = terms_.erase(it);
        } else {
            it->second = r;
            ++it;
        }
    }
}

// ---------------------------------------------------------------------------
// OrderedComplex
// ---------------------------------------------------------------------------

OrderedComplex OrderedComplex::from_maximal_faces(const std::vector<std::vector<Vertex>>& faces) {
    OrderedComplex K;
    std::set<Simplex> closure;
    Vertex max_id = -1;
    for (const auto& f : faces) {
        if (f.empty()) throw parse_error("empty face");
        Simplex s = Simplex::from_unsorted(f);
        max_id = std::max(max_id, s.vertices().back());
        // Insert the full downward closure of s.
        std::function<void(const Simplex&)> close = [&](const Simplex& t) {
            if (!closure.insert(t).second) return;
            if (t.dim() == 0) return;
            for (int i = 0; i <= t.dim(); ++i) close(t.without_position(i));
        };
        close(s);
    }
    int d = -1;
    for (const auto& s : closure) d = std::max(d, s.dim());
    K.faces_.assign(static_cast<std::size_t>(d + 1), {});
    for (const auto& s : closure)
        K.faces_[static_cast<std::size_t>(s.dim())].push_back(s);
    // std::set iterates dim-major then lex, so each per-dimension list is
    // already in dictionary order; sort anyway to keep the invariant local.
    for (auto& list : K.faces_) std::sort(list.begin(), list.end());

    int n_vertices = K.faces_.empty() ? 0 : static_cast<int>(K.faces_[0].size());
    if (max_id + 1 != n_vertices)
        throw parse_error("vertex ids must be dense (every id below the maximum must occur)");
    K.labels_.resize(static_cast<std::size_t>(n_vertices));
    for (int v = 0; v < n_vertices; ++v)
        K.labels_[static_cast<std::size_t>(v)] = std::to_string(v);

    K.index_faces();
    return K;
}

void OrderedComplex::index_faces() {
    rank_.clear();
    for (const auto& list : faces_)
        for (std::size_t i = 0; i < list.size(); ++i)
            rank_.emplace(list[i], static_cast<int>(i));

    facets_.assign(faces_.size(), {});
    cofacets_.assign(faces_.size(), {});
    for (std::size_t d = 0; d < faces_.size(); ++d) {
        facets_[d].assign(faces_[d].size(), {});
        cofacets_[d].assign(faces_[d].size(), {});
    }
    for (std::size_t d = 1; d < faces_.size(); ++d) {
        for (std::size_t i = 0; i < faces_[d].size(); ++i) {
            const Simplex& s = faces_[d][i];
            for (int j = 0; j <= s.dim(); ++j) {
                Simplex f = s.without_position(j);
                int fr = rank_of(f);
                if (fr < 0)
                    throw parse_error("face list is not downward closed");
                int sign = (j % 2 == 0) ? 1 : -1;
                facets_[d][i].emplace_back(fr, sign);
                cofacets_[d - 1][static_cast<std::size_t>(fr)].emplace_back(static_cast<int>(i), sign);
            }
        }
    }
}

void OrderedComplex::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != vertex_count())
        throw contract_violation("label table size must equal the vertex count");
    labels_ = std::move(labels);
}

const std::string& OrderedComplex::label(Vertex v) const {
    if (v < 0 || v >= vertex_count())
        throw contract_violation("vertex id out of range");
    return labels_[static_cast<std::size_t>(v)];
}

int OrderedComplex::count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return static_cast<int>(faces_[static_cast<std::size_t>(d)].size());
}

long long OrderedComplex::total_faces() const {
    long long t = 0;
    for (const auto& list : faces_) t += static_cast<long long>(list.size());
    return t;
}

const Simplex& OrderedComplex::face(int d, int i) const {
    if (d < 0 || d > dim() || i < 0 || i >= count(d))
        throw contract_violation("face address out of range");
    return faces_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

int OrderedComplex::rank_of(const Simplex& s) const {
    auto it = rank_.find(s);
    return it == rank_.end() ? -1 : it->second;
}

const std::vector<std::pair<int, int>>& OrderedComplex::facets(int d, int i) const {
    face(d, i); // bounds check
    return facets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

const std::vector<std::pair<int, int>>& OrderedComplex::cofacets(int d, int i) const {
    face(d, i); // bounds check
    return cofacets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

ChainExpr OrderedComplex::boundary(const Simplex& s) const {
    if (!contains(s)) throw contract_violation("boundary of a non-face");
    ChainExpr b(s.dim() - 1);
    if (s.dim() == 0) return b; // vertices are cycles
    for (int j = 0; j <= s.dim(); ++j)
        b.add_term(s.without_position(j), (j % 2 == 0) ? 1 : -1);
    return b;
}

std::optional<Simplex> OrderedComplex::coface(const Simplex& alpha, Vertex v) const {
    if (alpha.contains(v)) return std::nullopt;
    Simplex beta = alpha.with_vertex(v).first;
    if (!contains(beta)) return std::nullopt;
    return beta;
}

std::optional<Simplex> OrderedComplex::coface_at(const Simplex& alpha, Vertex v, int r) const {
    if (alpha.contains(v)) return std::nullopt;
    if (alpha.insertion_position(v) != r) return std::nullopt;
    return coface(alpha, v);
}

std::string OrderedComplex::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = labels_;
    auto faces = nlohmann::ordered_json::array();
    for (int d = 0; d <= dim(); ++d) {
        auto level = nlohmann::ordered_json::array();
        for (int i = 0; i < count(d); ++i) {
            auto f = nlohmann::ordered_json::array();
            for (Vertex v : face(d, i).vertices()) f.push_back(label(v));
            level.push_back(std::move(f));
        }
        faces.push_back(std::move(level));
    }
    j["faces_by_dim"] = std::move(faces);
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Parsing and formatting
// ---------------------------------------------------------------------------

namespace {

bool is_number(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

OrderedComplex relabel(const OrderedComplex& K, const std::vector<Vertex>& new_id_of) {
    const int n = K.vertex_count();
    if (static_cast<int>(new_id_of.size()) != n)
        throw contract_violation("relabel permutation has the wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : new_id_of) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw contract_violation("relabel requires a permutation of the vertex ids");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::vector<Vertex>> faces;
    // Top-dimensional faces alone need not cover lower-dimensional maximal
    // faces, so re-insert every face; closure construction deduplicates.
    for (int d = 0; d <= K.dim(); ++d) {
        for (int i = 0; i < K.count(d); ++i) {
            std::vector<Vertex> f;
            for (Vertex v : K.face(d, i).vertices())
                f.push_back(new_id_of[static_cast<std::size_t>(v)]);
            faces.push_back(std::move(f));
        }
    }
    OrderedComplex out = OrderedComplex::from_maximal_faces(faces);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        labels[static_cast<std::size_t>(new_id_of[static_cast<std::size_t>(v)])] = K.label(v);
    out.set_labels(std::move(labels));
    return out;
}

OrderedComplex parse_complex_text(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::set<std::string> label_set;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        for (const auto& t : tokens) label_set.insert(t);
        lines.push_back(std::move(tokens));
    }
    if (lines.empty()) throw parse_error("no faces in input");

    std::vector<std::string> labels(label_set.begin(), label_set.end());
    bool numeric = std::all_of(labels.begin(), labels.end(), is_number);
    if (numeric) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
    } // else: already in lexicographic order from the std::set
    std::map<std::string, Vertex> id;
    for (std::size_t i = 0; i < labels.size(); ++i)
        id[labels[i]] = static_cast<Vertex>(i);

    std::vector<std::vector<Vertex>> faces;
    faces.reserve(lines.size());
    for (const auto& tokens : lines) {
        std::vector<Vertex> f;
        f.reserve(tokens.size());
        for (const auto& t : tokens) f.push_back(id[t]);
        faces.push_back(std::move(f));
    }
    OrderedComplex K = OrderedComplex::from_maximal_faces(faces);
    K.set_labels(std::move(labels));
    return K;
}

OrderedComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return parse_complex_text(in);
}

std::string format_simplex(const OrderedComplex& K, const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += K.label(s.vertices()[i]);
    }
    out += "]";
    return out;
}

std::string format_chain(const OrderedComplex& K, const ChainExpr& z) {
    if (z.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : z.terms()) {
        Coeff a = c;
        if (first) {
            if (a < 0) { out += "-"; a = checked_neg(a); }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = checked_neg(a);
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += format_simplex(K, s);
        first = false;
    }
    return out;
}

} // namespace dmorse
