#pragma once

#include "schur/lie_algebra.hpp"

namespace schur {

/// Lexicographic index of the wedge pair (i < j) among all pairs of 0..n-1.
int wedge_pair_index(int n, int i, int j);

/// Degree-2 boundary of the trivial-coefficient chain complex: the (i < j)
/// column is the coordinate vector of [e_i, e_j]. Size n x C(n,2).
Matrix boundary_d2(const LieAlgebra& L);

/// Degree-3 boundary: the (i < j < k) column encodes
/// [e_i,e_j]^e_k - [e_i,e_k]^e_j + [e_j,e_k]^e_i in the wedge-pair basis.
/// Size C(n,2) x C(n,3).
Matrix boundary_d3(const LieAlgebra& L);

/// dim M(L) = dim H_2(L; Q) = C(n,2) - rank d2 - rank d3.
int multiplier_dim(const LieAlgebra& L);

/// dim (L wedge L) = dim M(L) + dim L^2.
int exterior_square_dim(const LieAlgebra& L);

}  // namespace schur
