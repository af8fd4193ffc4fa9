#pragma once

#include <vector>

#include "ade/cyclotomic.hpp"

namespace ade {

/// Small dense integer matrix, row major.
struct MatZ {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(long r, long c) : rows(r), cols(c), a(r * c) {}
    Int& at(long r, long c) { return a[r * cols + c]; }
    const Int& at(long r, long c) const { return a[r * cols + c]; }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(MatZ m);

/// Rational kernel {x : A x = 0} of an integer matrix, via fraction-free
/// elimination to echelon form followed by exact back-substitution.
/// Returns one basis vector per free column; rank_out gets rank(A).
std::vector<std::vector<Rat>> kernel_basis(const MatZ& m, long* rank_out);

/// In-place reduced row echelon form over Q.  Rows end up sorted by pivot
/// column; returns the pivot column of each surviving row.  Zero rows are
/// dropped.
std::vector<long> rref(std::vector<std::vector<Rat>>& rows);

/// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations,
/// ascending.  Iterates until the off-diagonal Frobenius norm is below
/// 1e-13, which bounds the eigenvalue error by the same amount.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

}  // namespace ade
