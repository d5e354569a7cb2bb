#pragma once

#include <random>
#include <utility>
#include <vector>

#include "schur/lie_algebra.hpp"
#include "schur/linalg.hpp"
#include "schur/matrix.hpp"

namespace test_support {

inline schur::Matrix random_int_matrix(int rows, int cols, std::mt19937& rng, int lo = -9,
                                       int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    schur::Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = schur::Rational(dist(rng));
    return m;
}

// Random determinant +-1 matrix together with its exact inverse, built from
// elementary row operations (integer shears and swaps).
inline std::pair<schur::Matrix, schur::Matrix> random_unimodular(int n, std::mt19937& rng,
                                                                int ops = 40) {
    struct Op {
        bool swap;
        int i, j;
        long k;
    };
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<long> shear(-3, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    std::vector<Op> script;
    for (int t = 0; t < ops; ++t) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (kind(rng) == 0)
            script.push_back({true, i, j, 0});
        else
            script.push_back({false, i, j, shear(rng)});
    }
    auto apply = [n](schur::Matrix& m, const Op& op, bool inverse) {
        if (op.swap) {
            m.swap_rows(op.i, op.j);
            return;
        }
        schur::Rational f(inverse ? -op.k : op.k);
        for (int c = 0; c < n; ++c) m.at(op.j, c) = m.at(op.j, c) + f * m.at(op.i, c);
    };
    schur::Matrix p = schur::Matrix::identity(n);
    for (const Op& op : script) apply(p, op, false);
    schur::Matrix pinv = schur::Matrix::identity(n);
    for (auto it = script.rbegin(); it != script.rend(); ++it) apply(pinv, *it, true);
    return {p, pinv};
}

// Structure constants of L rewritten in the basis f_a = sum_i P(a,i) e_i;
// pinv must be the exact inverse of p.
inline schur::LieAlgebra change_basis(const schur::LieAlgebra& L, const schur::Matrix& p,
                                      const schur::Matrix& pinv) {
    const int n = L.dim();
    schur::LieAlgebra out(n, L.name());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<schur::Rational> w = L.bracket(p.row(a), p.row(b));
            for (int k = 0; k < n; ++k) {
                schur::Rational coord;
                for (int l = 0; l < n; ++l)
                    if (!w[l].is_zero()) coord += w[l] * pinv.at(l, k);
                if (!coord.is_zero()) out.set_bracket_component(a, b, k, coord);
            }
        }
    return out;
}

// Nonabelian, non-nilpotent comparison point: [e0,e1]=e2, [e2,e0]=2e0,
// [e2,e1]=-2e1 (the lower central series stabilizes at the whole space).
inline schur::LieAlgebra simple_sl2() {
    schur::LieAlgebra L(3, "sl2");
    L.set_bracket_component(0, 1, 2, schur::Rational(1));
    L.set_bracket_component(0, 2, 0, schur::Rational(-2));
    L.set_bracket_component(1, 2, 1, schur::Rational(2));
    return L;
}

}  // namespace test_support
