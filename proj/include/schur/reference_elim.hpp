#pragma once

#include "schur/matrix.hpp"

namespace schur::reference {

/// Serial textbook Gaussian elimination over exact fractions. Kept as the
/// independent cross-check for the fraction-free kernel in linalg.cpp and as
/// the baseline in rank_bench; not used on any production path.
int rank_naive(const Matrix& m);

}  // namespace schur::reference
