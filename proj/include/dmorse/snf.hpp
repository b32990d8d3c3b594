#ifndef DMORSE_SNF_HPP
#define DMORSE_SNF_HPP

/**
 * Dense integer matrices, Smith normal form with optional transform
 * tracking, integer ranks, mod-p ranks, and exact integer linear solves.
 * All arithmetic is overflow-checked.
 */

#include "dmorse/complex.hpp"

#include <optional>
#include <vector>

namespace dmorse {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Coeff> data; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    Coeff& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    Coeff at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transpose() const;
    bool operator==(const IntMatrix&) const = default;
};

/// R * A * C = S with S diagonal and the diagonal a divisibility chain.
struct SmithResult {
    IntMatrix S;
    IntMatrix R; // rows x rows (identity when transforms were not tracked)
    IntMatrix C; // cols x cols
    std::vector<Coeff> invariant_factors; // positive nonzero diagonal entries
    int rank = 0;
};

SmithResult smith_normal_form(IntMatrix A, bool track_transforms = false);

/// Rank over the integers (= rank over the rationals).
int rank_z(const IntMatrix& A);

/// Rank over the field with p elements (p prime).
int rank_mod_p(IntMatrix A, Coeff p);

/// One integer solution x of A x = b, or nullopt when none exists.
std::optional<std::vector<Coeff>> solve_integer(const IntMatrix& A, const std::vector<Coeff>& b);

/// Factored integer solver: one Smith decomposition, many right-hand sides.
class IntSolver {
public:
    explicit IntSolver(IntMatrix A);
    /// One integer solution of A x = b, or nullopt when none exists.
    std::optional<std::vector<Coeff>> solve(const std::vector<Coeff>& b) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    SmithResult snf_;
};

/// Matrix * vector with overflow checking.
std::vector<Coeff> mat_vec(const IntMatrix& A, const std::vector<Coeff>& x);

} // namespace dmorse

#endif // DMORSE_SNF_HPP
