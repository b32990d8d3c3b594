#include "dmorse/cup.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace dmorse {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw contract_violation(what);
}

Coeff norm_mod2(Coeff c) {
    c %= 2;
    return c < 0 ? c + 2 : c;
}

void put_term(TensorElt& t, const std::vector<std::pair<int, int>>& key, Coeff c) {
    if (t.mod2) c = norm_mod2(c);
    if (c == 0) return;
    auto [it, fresh] = t.terms.emplace(key, 0);
    it->second = checked_add(it->second, c);
    if (t.mod2) it->second = norm_mod2(it->second);
    if (it->second == 0) t.terms.erase(it);
}

} // namespace

ChainExpr simplicial_cup(const OrderedComplex& K, const ChainExpr& x, const ChainExpr& y) {
    require(x.dim() >= 0 && y.dim() >= 0, "simplicial_cup: cochains must carry a degree");
    ChainExpr out(x.dim() + y.dim());
    if (x.zero() || y.zero()) return out;
    // Bucket the right factor by leading vertex; a term pair contributes
    // exactly when the last vertex of the left term equals the first vertex
    // of the right term and the concatenation is a face.
    std::unordered_map<Vertex, std::vector<std::pair<const Simplex*, Coeff>>> lead;
    for (const auto& [beta, yc] : y.terms())
        lead[beta.vertices().front()].push_back({&beta, yc});
    for (const auto& [alpha, xc] : x.terms()) {
        auto it = lead.find(alpha.vertices().back());
        if (it == lead.end()) continue;
        for (const auto& [beta, yc] : it->second) {
            std::vector<Vertex> vs = alpha.vertices();
            vs.insert(vs.end(), beta->vertices().begin() + 1, beta->vertices().end());
            Simplex joined(std::move(vs));
            if (!K.contains(joined)) continue;
            out.add_term(joined, checked_mul(xc, yc));
        }
    }
    return out;
}

ChainExpr morse_cup(const MorseComplex& mc, const ChainExpr& x, const ChainExpr& y) {
    require(mc.K != nullptr && mc.F != nullptr, "morse_cup: empty Morse complex");
    require(is_morse_cocycle(mc, x), "morse_cup: left factor is not a cocycle");
    require(is_morse_cocycle(mc, y), "morse_cup: right factor is not a cocycle");
    ChainExpr product = simplicial_cup(*mc.K, phi_up(mc, x), phi_up(mc, y));
    ChainExpr down = phi_down(mc, product);
    require(is_morse_cocycle(mc, down), "morse_cup: product failed to close");
    return down;
}

CohomologyRing conf2_ring(const MorseComplex& mc, const Conf2Basis& basis) {
    require(mc.K != nullptr && mc.F != nullptr, "conf2_ring: empty Morse complex");
    CohomologyRing R;
    R.m = basis.m;
    R.one_names = basis.one_names;
    for (const Simplex& s : basis.two_basis) R.two_names.push_back(matrix_label(basis.m, s));

    const int c2 = mc.critical_count(2);
    const int nb = static_cast<int>(basis.two_basis.size());
    require(static_cast<int>(basis.two_dependent.size()) + nb == c2,
            "conf2_ring: basis does not match the Morse complex");
    auto crit2_index = [&](const Simplex& s) {
        int rank = mc.K->rank_of(s);
        int idx = rank >= 0 ? mc.crit_index(2, rank) : -1;
        require(idx >= 0, "conf2_ring: face is not a critical 2-face");
        return idx;
    };

    // Decompose once: every degree-2 cochain splits over the chosen basis
    // columns plus the image of the degree-1 coboundary.
    IntMatrix D = mc.coboundary(1);
    IntMatrix M(c2, nb + D.cols);
    for (int j = 0; j < nb; ++j) M.at(crit2_index(basis.two_basis[j]), j) = 1;
    for (int r = 0; r < c2; ++r)
        for (int c = 0; c < D.cols; ++c) M.at(r, nb + c) = D.at(r, c);
    IntSolver solver(M);

    const int n1 = static_cast<int>(basis.one_cocycles.size());
    std::vector<ChainExpr> up;
    up.reserve(static_cast<std::size_t>(n1));
    for (const ChainExpr& x : basis.one_cocycles) {
        require(is_morse_cocycle(mc, x), "conf2_ring: basis element is not a cocycle");
        up.push_back(phi_up(mc, x));
    }

    R.products.assign(static_cast<std::size_t>(n1),
                      std::vector<std::vector<Coeff>>(static_cast<std::size_t>(n1)));
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
            ChainExpr p = phi_down(mc, simplicial_cup(*mc.K, up[static_cast<std::size_t>(i)],
                                                      up[static_cast<std::size_t>(j)]));
            std::vector<Coeff> rhs(static_cast<std::size_t>(c2), 0);
            for (const auto& [s, coef] : p.terms())
                rhs[static_cast<std::size_t>(crit2_index(s))] = coef;
            auto sol = solver.solve(rhs);
            require(sol.has_value(), "conf2_ring: product does not decompose over the basis");
            R.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                .assign(sol->begin(), sol->begin() + nb);
        }
    }
    return R;
}

namespace {

std::string coords_text(const std::vector<Coeff>& coords) {
    std::string s;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        Coeff c = coords[k];
        if (c == 0) continue;
        if (c > 0 && !s.empty()) s += "+";
        if (c == -1)
            s += "-";
        else if (c != 1)
            s += std::to_string(c);
        s += "B" + std::to_string(k);
    }
    return s.empty() ? "." : s;
}

} // namespace

std::string ring_table_text(const CohomologyRing& R) {
    std::string out;
    out += "degree-2 basis:\n";
    for (int k = 0; k < R.two_rank(); ++k)
        out += "  B" + std::to_string(k) + " = " + R.two_names[static_cast<std::size_t>(k)] + "\n";
    if (R.two_rank() == 0) out += "  (none)\n";
    out += "\n";

    const int n1 = R.one_rank();
    std::size_t width = 1;
    for (const std::string& name : R.one_names) width = std::max(width, name.size());
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n1));
    for (int i = 0; i < n1; ++i) {
        cells[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n1));
        for (int j = 0; j < n1; ++j) {
            std::string cell = coords_text(R.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            width = std::max(width, cell.size());
            cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(cell);
        }
    }
    auto pad = [width](const std::string& s) {
        return s + std::string(width - s.size(), ' ');
    };
    out += pad("") + " |";
    for (const std::string& name : R.one_names) out += " " + pad(name);
    out += "\n";
    out += std::string(width, '-') + "-+" + std::string((width + 1) * static_cast<std::size_t>(n1), '-') + "\n";
    for (int i = 0; i < n1; ++i) {
        out += pad(R.one_names[static_cast<std::size_t>(i)]) + " |";
        for (int j = 0; j < n1; ++j)
            out += " " + pad(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        out += "\n";
    }
    return out;
}

std::string ring_table_json(const CohomologyRing& R) {
    nlohmann::ordered_json j;
    j["basis"] = R.one_names;
    j["degree2"] = R.two_names;
    auto products = nlohmann::ordered_json::object();
    for (int i = 0; i < R.one_rank(); ++i)
        for (int k = 0; k < R.one_rank(); ++k) {
            const auto& coords = R.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            bool nonzero = std::any_of(coords.begin(), coords.end(), [](Coeff c) { return c != 0; });
            if (!nonzero) continue;
            products[R.one_names[static_cast<std::size_t>(i)] + "," +
                     R.one_names[static_cast<std::size_t>(k)]] = coords;
        }
    j["products"] = std::move(products);
    return j.dump(2);
}

TensorElt tensor_unit(int slots, bool mod2) {
    require(slots >= 1, "tensor_unit: need at least one slot");
    TensorElt t;
    t.slots = slots;
    t.mod2 = mod2;
    t.terms[std::vector<std::pair<int, int>>(static_cast<std::size_t>(slots), {0, 0})] = 1;
    return t;
}

TensorElt one_class_in_slot(const CohomologyRing& R, int slots, bool mod2, int slot,
                            const std::vector<Coeff>& coords) {
    require(slots >= 1 && 0 <= slot && slot < slots, "one_class_in_slot: slot out of range");
    require(static_cast<int>(coords.size()) == R.one_rank(),
            "one_class_in_slot: coordinate length must match the degree-1 rank");
    TensorElt t;
    t.slots = slots;
    t.mod2 = mod2;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        std::vector<std::pair<int, int>> key(static_cast<std::size_t>(slots), {0, 0});
        key[static_cast<std::size_t>(slot)] = {1, static_cast<int>(k)};
        put_term(t, key, coords[k]);
    }
    return t;
}

TensorElt tensor_add(TensorElt a, const TensorElt& b) {
    require(a.slots == b.slots && a.mod2 == b.mod2, "tensor_add: mixed tensor modes");
    for (const auto& [key, c] : b.terms) put_term(a, key, c);
    return a;
}

TensorElt tensor_sub(TensorElt a, const TensorElt& b) {
    require(a.slots == b.slots && a.mod2 == b.mod2, "tensor_sub: mixed tensor modes");
    for (const auto& [key, c] : b.terms) put_term(a, key, checked_neg(c));
    return a;
}

TensorElt tensor_mul(const CohomologyRing& R, const TensorElt& a, const TensorElt& b) {
    require(a.slots == b.slots && a.mod2 == b.mod2, "tensor_mul: mixed tensor modes");
    TensorElt out;
    out.slots = a.slots;
    out.mod2 = a.mod2;
    const std::size_t s = static_cast<std::size_t>(a.slots);
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            // Sign for moving each right-hand slot factor left past the
            // later left-hand slots.
            Coeff sign = 1;
            if (!out.mod2) {
                long long cross = 0;
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = i + 1; j < s; ++j)
                        cross += static_cast<long long>(kb[i].first) * ka[j].first;
                if (cross % 2 != 0) sign = -1;
            }
            // Slotwise products, each a short sum of basis classes.
            std::vector<std::vector<std::pair<std::pair<int, int>, Coeff>>> factors(s);
            bool dead = false;
            for (std::size_t i = 0; i < s && !dead; ++i) {
                auto [da, ia] = ka[i];
                auto [db, ib] = kb[i];
                if (da == 0)
                    factors[i] = {{{db, ib}, 1}};
                else if (db == 0)
                    factors[i] = {{{da, ia}, 1}};
                else if (da + db > 2)
                    dead = true;  // beyond the top degree
                else {
                    const auto& coords = R.products[static_cast<std::size_t>(ia)]
                                                   [static_cast<std::size_t>(ib)];
                    for (std::size_t k = 0; k < coords.size(); ++k)
                        if (coords[k] != 0)
                            factors[i].push_back({{2, static_cast<int>(k)}, coords[k]});
                    if (factors[i].empty()) dead = true;
                }
            }
            if (dead) continue;
            // Distribute the slot sums.
            std::vector<std::pair<std::vector<std::pair<int, int>>, Coeff>> partial;
            partial.push_back({{}, checked_mul(checked_mul(ca, cb), sign)});
            for (std::size_t i = 0; i < s; ++i) {
                std::vector<std::pair<std::vector<std::pair<int, int>>, Coeff>> next;
                for (const auto& [key, c] : partial)
                    for (const auto& [cls, fc] : factors[i]) {
                        auto grown = key;
                        grown.push_back(cls);
                        next.push_back({std::move(grown), checked_mul(c, fc)});
                    }
                partial = std::move(next);
            }
            for (auto& [key, c] : partial) put_term(out, key, c);
        }
    }
    return out;
}

std::string tensor_text(const CohomologyRing& R, const TensorElt& t) {
    if (t.zero()) return "0";
    std::string out;
    for (const auto& [key, c] : t.terms) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Coeff mag = c > 0 ? c : -c;
        if (mag != 1) out += std::to_string(mag) + " * ";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0) out += " (x) ";
            auto [d, idx] = key[i];
            if (d == 0)
                out += "1";
            else if (d == 1)
                out += R.one_names[static_cast<std::size_t>(idx)];
            else
                out += R.two_names[static_cast<std::size_t>(idx)];
        }
    }
    return out;
}

bool DiagClass::is_zero() const {
    if (unit != 0) return false;
    auto all0 = [](const std::vector<Coeff>& v) {
        return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
    };
    return all0(one) && all0(two);
}

DiagClass diag_restriction(const CohomologyRing& R, const TensorElt& t) {
    DiagClass out;
    out.one.assign(static_cast<std::size_t>(R.one_rank()), 0);
    out.two.assign(static_cast<std::size_t>(R.two_rank()), 0);
    for (const auto& [key, c] : t.terms) {
        // Multiply the slot classes in order.
        int deg = 0;
        std::vector<Coeff> coords = {1};
        bool dead = false;
        for (auto [d, idx] : key) {
            if (d == 0) continue;
            if (deg == 0) {
                Coeff scalar = coords[0];
                deg = d;
                coords.assign(static_cast<std::size_t>(d == 1 ? R.one_rank() : R.two_rank()), 0);
                coords[static_cast<std::size_t>(idx)] = scalar;
            } else if (deg + d > 2) {
                dead = true;
                break;
            } else {
                // deg == 1 and d == 1: one table lookup per held coordinate.
                std::vector<Coeff> next(static_cast<std::size_t>(R.two_rank()), 0);
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    if (coords[i] == 0) continue;
                    const auto& row = R.products[i][static_cast<std::size_t>(idx)];
                    for (std::size_t k = 0; k < next.size(); ++k)
                        next[k] = checked_add(next[k], checked_mul(coords[i], row[k]));
                }
                coords = std::move(next);
                deg = 2;
            }
        }
        if (dead) continue;
        if (deg == 0)
            out.unit = checked_add(out.unit, checked_mul(c, coords[0]));
        else {
            auto& target = deg == 1 ? out.one : out.two;
            for (std::size_t i = 0; i < coords.size(); ++i)
                target[i] = checked_add(target[i], checked_mul(c, coords[i]));
        }
    }
    if (t.mod2) {
        out.unit = norm_mod2(out.unit);
        for (Coeff& c : out.one) c = norm_mod2(c);
        for (Coeff& c : out.two) c = norm_mod2(c);
    }
    return out;
}

ZclResult zcl_lower_bound(const CohomologyRing& R, const std::vector<TensorElt>& candidates) {
    require(!candidates.empty(), "zcl_lower_bound: need at least one candidate");
    const int slots = candidates.front().slots;
    const bool mod2 = candidates.front().mod2;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        require(candidates[k].slots == slots && candidates[k].mod2 == mod2,
                "zcl_lower_bound: mixed tensor modes among candidates");
        if (!diag_restriction(R, candidates[k]).is_zero())
            throw contract_violation("zcl_lower_bound: candidate " + std::to_string(k) +
                                     " does not restrict to zero along the diagonal");
    }
    ZclResult res;
    res.product = tensor_unit(slots, mod2);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        TensorElt trial = tensor_mul(R, res.product, candidates[k]);
        if (!trial.zero()) {
            res.product = std::move(trial);
            res.used.push_back(static_cast<int>(k));
        }
    }
    res.bound = static_cast<int>(res.used.size());
    return res;
}

ZclPlan zcl_plan(const CohomologyRing& R, int s) {
    require(s >= 2, "zcl_plan: need at least two tensor slots");
    require(R.m >= 4, "zcl_plan: ring does not describe a complete-graph model");
    ZclPlan P;
    P.mod2 = (R.m != 5);
    auto index_of = [&R](const std::string& name) {
        auto it = std::find(R.one_names.begin(), R.one_names.end(), name);
        require(it != R.one_names.end(), "zcl_plan: missing basis class " + name);
        return static_cast<std::size_t>(it - R.one_names.begin());
    };
    auto indicator = [&](const std::string& name) {
        std::vector<Coeff> v(static_cast<std::size_t>(R.one_rank()), 0);
        v[index_of(name)] = 1;
        return v;
    };
    auto difference = [&](const std::vector<Coeff>& coords, int slot, const std::string& name) {
        P.candidates.push_back(tensor_sub(one_class_in_slot(R, s, P.mod2, 0, coords),
                                          one_class_in_slot(R, s, P.mod2, slot, coords)));
        P.names.push_back(name + "(1)-" + name + "(" + std::to_string(slot + 1) + ")");
    };
    if (R.m == 4) {
        // Two distinct circles of the wedge: s factors certify the bound s.
        auto u = indicator("corner(1,2)");
        auto v = indicator("corner(1,3)");
        for (int i = 1; i < s; ++i) difference(u, i, "corner(1,2)");
        difference(v, s - 1, "corner(1,3)");
    } else if (R.m == 5) {
        // Integer quadruple: xx = yy = xz = yz = yw = 0 at class level while
        // x*y and z*w hit the single degree-2 class, so the full product is
        // twice its tensor power — nonzero over the integers only.
        auto x = indicator("corner(2,4)");
        auto y = indicator("first(1,3)");
        auto z = indicator("second(1,2)");
        std::vector<Coeff> w(static_cast<std::size_t>(R.one_rank()), 0);
        for (const char* name :
             {"corner(4,2)", "corner(4,1)", "corner(3,4)", "corner(3,2)", "corner(2,4)", "corner(1,4)"})
            w[index_of(name)] = 1;
        for (int i = 1; i < s; ++i) difference(x, i, "corner(2,4)");
        for (int i = 1; i < s; ++i) difference(y, i, "first(1,3)");
        difference(z, s - 1, "second(1,2)");
        difference(w, s - 1, "primed(4,2)");
    } else {
        // Two anchored pairs with disjoint index sets.
        auto x = indicator("first(1,2)");
        auto y = indicator("second(3,4)");
        auto z = indicator("second(1,3)");
        auto w = indicator("first(2,4)");
        for (int i = 1; i < s; ++i) difference(x, i, "first(1,2)");
        for (int i = 1; i < s; ++i) difference(y, i, "second(3,4)");
        difference(z, s - 1, "second(1,3)");
        difference(w, s - 1, "first(2,4)");
    }
    return P;
}

} // namespace dmorse
