#include "schur/homology.hpp"

#include <array>
#include <vector>

namespace schur {

int wedge_pair_index(int n, int i, int j) {
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Matrix boundary_d2(const LieAlgebra& L) {
    const int n = L.dim();
    Matrix d2(n, n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int col = wedge_pair_index(n, i, j);
            for (int k = 0; k < n; ++k)
                d2.at(k, col) = L.c(i, j, k);
        }
    return d2;
}

namespace {

// Adds coef * (e_a ^ e_b) to a wedge-pair column, folding in the sign.
void add_wedge(Matrix& m, int n, int col, int a, int b, const Rational& coef) {
    if (a == b || coef.is_zero())
        return;
    if (a < b)
        m.at(wedge_pair_index(n, a, b), col) += coef;
    else
        m.at(wedge_pair_index(n, b, a), col) -= coef;
}

}  // namespace

Matrix boundary_d3(const LieAlgebra& L) {
    const int n = L.dim();
    const int pairs = n * (n - 1) / 2;
    std::vector<std::array<int, 3>> triples;
    triples.reserve(size_t(n) * n * n / 6);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                triples.push_back({i, j, k});

    Matrix d3(pairs, int(triples.size()));
#pragma omp parallel for schedule(static) if (triples.size() >= 64)
    for (int col = 0; col < int(triples.size()); ++col) {
        const auto [i, j, k] = triples[col];
        for (int t = 0; t < n; ++t) {
            add_wedge(d3, n, col, t, k, L.c(i, j, t));
            add_wedge(d3, n, col, t, j, -L.c(i, k, t));
            add_wedge(d3, n, col, t, i, L.c(j, k, t));
        }
    }
    return d3;
}

int multiplier_dim(const LieAlgebra& L) {
    const int n = L.dim();
    const int pairs = n * (n - 1) / 2;
    return pairs - rank(boundary_d2(L)) - rank(boundary_d3(L));
}

int exterior_square_dim(const LieAlgebra& L) {
    return multiplier_dim(L) + derived_subalgebra(L).dim();
}

}  // namespace schur
