#pragma once

#include <span>
#include <vector>

#include "schur/matrix.hpp"

namespace schur {

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination on
/// the denominator-cleared integer matrix. Row updates run under OpenMP when
/// the remaining block is large enough; the result is exact and deterministic
/// either way. Pivoting is leftmost nonzero column, first nonzero row.
int rank(const Matrix& m);

/// Canonical reduced row echelon form: leading entries 1, pivot columns cleared
/// above and below, zero rows dropped. Pivot column indices (strictly
/// increasing) are stored in *pivots when given.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);

/// A subspace of Q^ambient, held as a canonical RREF basis (rows = dim).
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
public:
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    /// Span of the rows of `rows` (canonicalized; zero rows are fine).
    static Subspace from_rows(const Matrix& rows);
    /// Span of the given coordinate vectors e_i.
    static Subspace coordinate_span(int ambient_dim, const std::vector<int>& coords);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    /// v minus its projection onto this subspace along the pivot coordinates;
    /// the remainder has zeros at every pivot column and is the canonical coset
    /// representative of v.
    std::vector<Rational> reduce(std::span<const Rational> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(int ambient, Matrix basis, std::vector<int> pivots);
    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
};

/// Right null space of m, as a subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

}  // namespace schur
