#pragma once

#include <optional>

#include "schur/lie_algebra.hpp"
#include "schur/linalg.hpp"

namespace schur {

/// A pair (L, N) with N an ideal of L. When a complement is attached (an
/// ideal J with L = N + J and N ∩ J = 0), the relative multiplier splits off
/// of M(L) and becomes computable as a difference.
struct PairContext {
    LieAlgebra L;
    Subspace N;
    std::optional<Subspace> complement;
    int u = 0;           // dim L/N
    Subspace bracketLN;  // [L, N]
};

/// Verifies that N is an ideal and, when given, that the complement is an
/// ideal with N + J = L and N ∩ J = 0. Throws std::invalid_argument otherwise.
PairContext make_pair_context(const LieAlgebra& L, const Subspace& N,
                              std::optional<Subspace> complement = std::nullopt);

/// A triple (L, I, J) of ideals with L = I + J, I ∩ J = 0, plus an optional
/// central K ⊆ J ∩ Z(L) for the conditional inequality.
struct TripleContext {
    LieAlgebra L;
    Subspace I;
    Subspace J;
    std::optional<Subspace> K;
};

TripleContext make_triple_context(const LieAlgebra& L, const Subspace& I, const Subspace& J,
                                  std::optional<Subspace> K = std::nullopt);

/// dim M(L,N) = dim M(L) - dim M(L/N); requires the complement (the general
/// relative multiplier is not computed here).
long pair_multiplier_dim(const PairContext& ctx);

/// dim L∧N = dim M(L,N) + dim [L,N].
long pair_exterior_dim(const PairContext& ctx);

/// n(2u+n-1)/2 with n = dim N and u = dim L/N.
long pair_upper_bound(int nN, int u);

/// t(2s+t-1)/2 with s = dim L/(N+Phi(L)) and t = dim N/(N cap Phi(L)).
long pair_lower_bound(int s, int t);

struct PairBoundsCheck {
    int s = 0, t = 0, u = 0;
    long exterior = 0;     // dim M(L,N) + dim [L,N]
    long lower = 0;        // pair_lower_bound(s, t)
    long upper_dim_n = 0;  // pair_upper_bound(dim N, u) — the asserted reading
    long upper_dim_l = 0;  // same formula read with dim L, reported only
    bool lower_ok = false;
    bool upper_ok = false;
};

/// Sandwich check lower <= exterior <= upper for a complemented pair with L
/// nilpotent (so the Frattini subalgebra is L^2 and s, t are computable).
PairBoundsCheck check_pair_bounds(const PairContext& ctx);

/// dim M(L,I,J) = dim M(L,J) - dim M(J), with M(J) computed on the induced
/// structure constants of the ideal J.
long triple_multiplier_dim(const TripleContext& ctx);

struct InequalityCheck {
    long lhs = 0;
    long rhs = 0;
    bool holds = false;
    bool equality = false;
};

/// With K ⊆ J ∩ Z(L): checks
///   dim M(L,I,J) + dim M(J) + dim(K ∩ [L,J])
///     <= dim M(L/K, J/K) + dim M(K) + dim(L/(L²+K))·dim K.
InequalityCheck triple_inequality_check(const TripleContext& ctx);

struct CentralQuotientCheck {
    long quotient_multiplier = 0;  // dim M(L/Z)
    long middle = 0;               // dim M(L) + dim(L² ∩ Z)
    long upper = 0;                // dim M(L/Z) + dim Z · dim(L/L²)
    bool left_ok = false;
    bool right_ok = false;
};

/// Double inequality dim M(L/Z) <= dim M(L) + dim(L² ∩ Z)
///                              <= dim M(L/Z) + dim Z · dim(L/L²)
/// for a central subspace Z (any such subspace is an ideal).
CentralQuotientCheck central_quotient_check(const LieAlgebra& L, const Subspace& Z);

/// With K ⊆ N ∩ Z(L) and N complemented: checks
///   dim M(L,N) + dim(K ∩ [L,N])
///     <= dim M(L/K, N/K) + dim M(K) + dim(L/(L²+K))·dim K.
InequalityCheck complement_central_check(const PairContext& ctx, const Subspace& K);

struct EpicentralCheck {
    long lhs = 0;  // dim M(L) + dim(L² ∩ Z)
    long rhs = 0;  // dim M(L/Z)
    bool consistent = false;
};

/// Under the user-asserted hypothesis that Z lies in the epicenter, the two
/// sides must agree; this verifies the implied equality. It can refute the
/// hypothesis (consistent = false) but never establish it.
EpicentralCheck epicentral_consistency(const LieAlgebra& L, const Subspace& Z);

}  // namespace schur
