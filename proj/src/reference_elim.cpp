#include "schur/reference_elim.hpp"

namespace schur::reference {

int rank_naive(const Matrix& m) {
    Matrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot_row = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!a.at(i, c).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        if (pivot_row != r)
            a.swap_rows(r, pivot_row);
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, c).is_zero())
                continue;
            Rational f = a.at(i, c) / a.at(r, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace schur::reference
