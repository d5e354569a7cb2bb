#include "schur/linalg.hpp"

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>

namespace schur {

namespace {

// Denominator-cleared copy of a Rational matrix, row by row.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> e;

    mpz_class& at(int r, int c) { return e[size_t(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return e[size_t(r) * cols + c]; }

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols; ++c)
            std::swap(at(a, c), at(b, c));
    }
};

IntMatrix clear_denominators(const Matrix& m) {
    IntMatrix a;
    a.rows = m.rows();
    a.cols = m.cols();
    a.e.resize(size_t(a.rows) * a.cols);
    mpz_class l, f;
    for (int r = 0; r < a.rows; ++r) {
        l = 1;
        for (int c = 0; c < a.cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        for (int c = 0; c < a.cols; ++c) {
            const Rational& q = m.at(r, c);
            f = l / q.den();
            a.at(r, c) = q.num() * f;
        }
    }
    return a;
}

// Fraction-free forward elimination. Leaves the matrix in integer echelon form
// with the pivot rows first, records pivot columns, returns the rank. The
// division by the previous pivot is exact (entries are minors of the selected
// pivot submatrix); asserted in debug builds.
int bareiss_echelon(IntMatrix& a, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < a.rows; ++i) {
            if (a.at(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        if (pivot_row != r)
            a.swap_rows(r, pivot_row);

        const long remaining = long(a.rows - r - 1) * (a.cols - c);
#pragma omp parallel for schedule(static) if (remaining >= 4096)
        for (int i = r + 1; i < a.rows; ++i) {
            mpz_class t;
            for (int j = c + 1; j < a.cols; ++j) {
                t = a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j);
                assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

int rank(const Matrix& m) {
    IntMatrix a = clear_denominators(m);
    std::vector<int> pivots;
    return bareiss_echelon(a, pivots);
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
    IntMatrix a = clear_denominators(m);
    std::vector<int> pivot_cols;
    int rk = bareiss_echelon(a, pivot_cols);

    // Back-substitution over rationals on the surviving echelon rows.
    Matrix r(rk, m.cols());
    for (int i = 0; i < rk; ++i)
        for (int c = 0; c < m.cols(); ++c)
            r.at(i, c) = Rational(a.at(i, c));
    for (int i = rk - 1; i >= 0; --i) {
        const int pc = pivot_cols[i];
        Rational inv = Rational(1) / r.at(i, pc);
        for (int c = pc; c < m.cols(); ++c)
            r.at(i, c) *= inv;
        for (int k = 0; k < i; ++k) {
            Rational f = r.at(k, pc);
            if (f.is_zero())
                continue;
            for (int c = pc; c < m.cols(); ++c)
                r.at(k, c) -= f * r.at(i, c);
        }
    }
    if (pivots)
        *pivots = pivot_cols;
    return r;
}

Subspace::Subspace(int ambient, Matrix basis, std::vector<int> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(int ambient_dim) {
    return Subspace(ambient_dim, Matrix(0, ambient_dim), {});
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<int> pivots(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i)
        pivots[i] = i;
    return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::from_rows(const Matrix& rows) {
    std::vector<int> pivots;
    Matrix basis = rref(rows, &pivots);
    return Subspace(rows.cols(), std::move(basis), std::move(pivots));
}

Subspace Subspace::coordinate_span(int ambient_dim, const std::vector<int>& coords) {
    Matrix rows(int(coords.size()), ambient_dim);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= ambient_dim)
            throw std::invalid_argument("coordinate_span: index out of range");
        rows.at(int(i), coords[i]) = Rational(1);
    }
    return from_rows(rows);
}

std::vector<Rational> Subspace::reduce(std::span<const Rational> v) const {
    if (int(v.size()) != ambient_)
        throw std::invalid_argument("Subspace: vector length mismatch");
    std::vector<Rational> w(v.begin(), v.end());
    for (int r = 0; r < basis_.rows(); ++r) {
        const Rational f = w[pivots_[r]];
        if (f.is_zero())
            continue;
        for (int c = pivots_[r]; c < ambient_; ++c)
            w[c] -= f * basis_.at(r, c);
    }
    return w;
}

bool Subspace::contains(std::span<const Rational> v) const {
    for (const Rational& x : reduce(v))
        if (!x.is_zero())
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    for (int r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    std::vector<int> pivot_cols;
    Matrix r = rref(m, &pivot_cols);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivot_cols)
        is_pivot[p] = true;

    const int nullity = m.cols() - int(pivot_cols.size());
    Matrix rows(nullity, m.cols());
    int out = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        rows.at(out, f) = Rational(1);
        for (size_t i = 0; i < pivot_cols.size(); ++i)
            rows.at(out, pivot_cols[i]) = -r.at(int(i), f);
        ++out;
    }
    return Subspace::from_rows(rows);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.ambient_dim(); ++c)
            stacked.at(r, c) = a.basis().at(r, c);
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < b.ambient_dim(); ++c)
            stacked.at(a.dim() + r, c) = b.basis().at(r, c);
    return Subspace::from_rows(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
    const int n = a.ambient_dim();
    const int da = a.dim(), db = b.dim();
    if (da == 0 || db == 0)
        return Subspace::zero(n);

    // v in the intersection iff v = x*A = y*B; solve A^T x - B^T y = 0.
    Matrix sys(n, da + db);
    for (int r = 0; r < da; ++r)
        for (int c = 0; c < n; ++c)
            sys.at(c, r) = a.basis().at(r, c);
    for (int r = 0; r < db; ++r)
        for (int c = 0; c < n; ++c)
            sys.at(c, da + r) = -b.basis().at(r, c);

    Subspace coeffs = kernel_basis(sys);
    Matrix rows(coeffs.dim(), n);
    for (int k = 0; k < coeffs.dim(); ++k)
        for (int r = 0; r < da; ++r) {
            const Rational& x = coeffs.basis().at(k, r);
            if (x.is_zero())
                continue;
            for (int c = 0; c < n; ++c)
                rows.at(k, c) += x * a.basis().at(r, c);
        }
    return Subspace::from_rows(rows);
}

}  // namespace schur
