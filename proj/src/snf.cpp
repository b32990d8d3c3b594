/**
 * Smith normal form and modular rank computations.
 *
 * The reduction prefers +-1 pivots (boundary-style matrices are full of
 * them, and a unit pivot never grows the remaining entries), falls back to
 * a minimal-magnitude pivot otherwise, and repairs divisibility of the
 * diagonal afterwards, so the reported invariant factors form a chain.
 */

#include "dmorse/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace dmorse {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            T.at(c, r) = at(r, c);
    return T;
}

namespace {

// Elementary operations, mirrored onto the transform matrices when tracked.

void swap_rows(IntMatrix& A, int i, int j, IntMatrix* R) {
    if (i == j) return;
    for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    if (R)
        for (int c = 0; c < R->cols; ++c) std::swap(R->at(i, c), R->at(j, c));
}

void swap_cols(IntMatrix& A, int i, int j, IntMatrix* C) {
    if (i == j) return;
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    if (C)
        for (int r = 0; r < C->rows; ++r) std::swap(C->at(r, i), C->at(r, j));
}

// row_i -= q * row_j
void add_row(IntMatrix& A, int i, int j, Coeff q, IntMatrix* R) {
    if (q == 0) return;
    for (int c = 0; c < A.cols; ++c)
        A.at(i, c) = checked_add(A.at(i, c), checked_neg(checked_mul(q, A.at(j, c))));
    if (R)
        for (int c = 0; c < R->cols; ++c)
            R->at(i, c) = checked_add(R->at(i, c), checked_neg(checked_mul(q, R->at(j, c))));
}

// col_i -= q * col_j
void add_col(IntMatrix& A, int i, int j, Coeff q, IntMatrix* C) {
    if (q == 0) return;
    for (int r = 0; r < A.rows; ++r)
        A.at(r, i) = checked_add(A.at(r, i), checked_neg(checked_mul(q, A.at(r, j))));
    if (C)
        for (int r = 0; r < C->rows; ++r)
            C->at(r, i) = checked_add(C->at(r, i), checked_neg(checked_mul(q, C->at(r, j))));
}

void negate_row(IntMatrix& A, int i, IntMatrix* R) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) = checked_neg(A.at(i, c));
    if (R)
        for (int c = 0; c < R->cols; ++c) R->at(i, c) = checked_neg(R->at(i, c));
}

} // namespace

SmithResult smith_normal_form(IntMatrix A, bool track_transforms) {
    SmithResult res;
    IntMatrix R = IntMatrix::identity(A.rows);
    IntMatrix C = IntMatrix::identity(A.cols);
    IntMatrix* Rp = track_transforms ? &R : nullptr;
    IntMatrix* Cp = track_transforms ? &C : nullptr;

    int t = 0;
    const int bound = std::min(A.rows, A.cols);
    while (t < bound) {
        // Locate a pivot in the trailing submatrix, preferring |a| == 1.
        int pr = -1, pc = -1;
        Coeff best = 0;
        for (int r = t; r < A.rows && best != 1; ++r) {
            for (int c = t; c < A.cols; ++c) {
                Coeff a = std::llabs(A.at(r, c));
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pr = r;
                    pc = c;
                    if (best == 1) break;
                }
            }
        }
        if (pr < 0) break; // submatrix is zero

        swap_rows(A, t, pr, Rp);
        swap_cols(A, t, pc, Cp);

        // Reduce the pivot row and column until both are clear.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < A.rows; ++r) {
                if (A.at(r, t) == 0) continue;
                Coeff q = A.at(r, t) / A.at(t, t);
                add_row(A, r, t, q, Rp);
                if (A.at(r, t) != 0) {
                    // Remainder became the smaller pivot candidate.
                    swap_rows(A, t, r, Rp);
                    clean = false;
                }
            }
            for (int c = t + 1; c < A.cols; ++c) {
                if (A.at(t, c) == 0) continue;
                Coeff q = A.at(t, c) / A.at(t, t);
                add_col(A, c, t, q, Cp);
                if (A.at(t, c) != 0) {
                    swap_cols(A, t, c, Cp);
                    clean = false;
                }
            }
        }

        // Divisibility repair: the pivot must divide the whole submatrix.
        bool restart = false;
        if (std::llabs(A.at(t, t)) != 1) {
            for (int r = t + 1; r < A.rows && !restart; ++r) {
                for (int c = t + 1; c < A.cols; ++c) {
                    if (A.at(r, c) % A.at(t, t) != 0) {
                        add_row(A, t, r, -1, Rp); // row_t += row_r
                        restart = true;
                        break;
                    }
                }
            }
        }
        if (restart) continue;

        if (A.at(t, t) < 0) negate_row(A, t, Rp);
        ++t;
    }

    res.rank = t;
    res.invariant_factors.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) res.invariant_factors.push_back(A.at(i, i));
    res.S = std::move(A);
    res.R = std::move(R);
    res.C = std::move(C);
    return res;
}

int rank_z(const IntMatrix& A) {
    return smith_normal_form(A, false).rank;
}

namespace {

Coeff mod_pos(Coeff a, Coeff p) {
    Coeff r = a % p;
    return r < 0 ? r + p : r;
}

Coeff mod_inverse(Coeff a, Coeff p) {
    // Extended Euclid; p prime and a nonzero mod p.
    Coeff t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        Coeff q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_pos(t, p);
}

} // namespace

int rank_mod_p(IntMatrix A, Coeff p) {
    if (p < 2) throw contract_violation("modulus must be a prime >= 2");
    for (Coeff& a : A.data) a = mod_pos(a, p);
    int rank = 0;
    for (int c = 0; c < A.cols && rank < A.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < A.rows; ++r)
            if (A.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int cc = 0; cc < A.cols; ++cc) std::swap(A.at(rank, cc), A.at(pivot, cc));
        Coeff inv = mod_inverse(A.at(rank, c), p);
        for (int cc = c; cc < A.cols; ++cc) A.at(rank, cc) = mod_pos(A.at(rank, cc) * inv, p);
        for (int r = 0; r < A.rows; ++r) {
            if (r == rank || A.at(r, c) == 0) continue;
            Coeff f = A.at(r, c);
            for (int cc = c; cc < A.cols; ++cc)
                A.at(r, cc) = mod_pos(A.at(r, cc) - f * A.at(rank, cc), p);
        }
        ++rank;
    }
    return rank;
}

std::vector<Coeff> mat_vec(const IntMatrix& A, const std::vector<Coeff>& x) {
    if (static_cast<int>(x.size()) != A.cols)
        throw contract_violation("vector length must equal the column count");
    std::vector<Coeff> y(static_cast<std::size_t>(A.rows), 0);
    for (int r = 0; r < A.rows; ++r) {
        Coeff acc = 0;
        for (int c = 0; c < A.cols; ++c)
            acc = checked_add(acc, checked_mul(A.at(r, c), x[static_cast<std::size_t>(c)]));
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

IntSolver::IntSolver(IntMatrix A)
    : rows_(A.rows), cols_(A.cols), snf_(smith_normal_form(std::move(A), true)) {}

std::optional<std::vector<Coeff>> IntSolver::solve(const std::vector<Coeff>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw contract_violation("right-hand side length must equal the row count");
    // A x = b  <=>  S y = R b with x = C y.
    std::vector<Coeff> rb = mat_vec(snf_.R, b);
    std::vector<Coeff> y(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i) {
        Coeff v = rb[static_cast<std::size_t>(i)];
        if (i < snf_.rank) {
            Coeff d = snf_.S.at(i, i);
            if (v % d != 0) return std::nullopt;
            if (i < cols_) y[static_cast<std::size_t>(i)] = v / d;
        } else if (v != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(snf_.C, y);
}

std::optional<std::vector<Coeff>> solve_integer(const IntMatrix& A, const std::vector<Coeff>& b) {
    return IntSolver(A).solve(b);
}

} // namespace dmorse
