#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur/lie_algebra.hpp"

namespace schur {

/// Upper bound n(n-1)/2 valid for every n-dimensional nilpotent algebra;
/// equality holds exactly in the abelian case.
long batten_bound(int n);

/// The expression (m - m^2 + 2mn - 2n)/2. Evaluated verbatim and reported for
/// reference only: it can undershoot the multiplier dimension (H(1) gives 0
/// against a multiplier of 2), so reports never assert it.
long yankosky_bound(int n, int m);

/// Upper bound (n+m-2)(n-m-1)/2 + 1 for nonabelian input (m = dim L^2 >= 1).
long nice_bound(int n, int m);

/// Upper bound (n-m)(n-m-1)/2 + m(n-d-1) with d = dim Z(L); degenerates to
/// batten_bound(n) when m = 0.
long salemkar_bound(int n, int m, int d);

/// Upper bound sum_{j=1..c} witt_dim(gens, j+1); the empty sum for c = 0 is 0.
long bosko_bound(int gens, int c);

/// True iff n >= 3, d >= 1, and m <= floor((n-2)/(d+1)): the region where the
/// nice bound is guaranteed to be at least as sharp as the salemkar bound.
bool theorem1_region(int n, int m, int d);

struct BoundEntry {
    std::string name;
    std::optional<long> value;  // nullopt renders as "n/a"
    bool asserted = false;
    bool holds = false;
};

struct BoundReport {
    StructuralProfile profile;
    long multiplier = 0;
    std::vector<BoundEntry> entries;
};

/// Evaluates every bound against the computed multiplier dimension of a
/// validated nilpotent algebra. Entries appear in the order batten, yankosky,
/// nice, salemkar, bosko; for abelian input the entries needing m >= 1 are
/// "n/a", and bosko uses gens = dim L/L^2 (the minimal generator count, which
/// gives the tightest instance). Throws for non-nilpotent input.
BoundReport bound_report(const LieAlgebra& L);

}  // namespace schur
