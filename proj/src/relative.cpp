#include "schur/relative.hpp"

#include <stdexcept>

#include "schur/homology.hpp"

namespace schur {

namespace {

Subspace project_subspace(const Subspace& S, const Matrix& projection) {
    if (S.dim() == 0) return Subspace::zero(projection.rows());
    return Subspace::from_rows(S.basis() * projection.transposed());
}

long quotient_multiplier(const LieAlgebra& L, const Subspace& ideal) {
    return multiplier_dim(quotient(L, ideal).algebra);
}

// dim M(L/K, N/K) where the complement J of N descends to a complement of
// N/K in L/K (valid whenever K ⊆ N).
long pair_multiplier_after_quotient(const LieAlgebra& L, const Subspace& K, const Subspace& N,
                                    const Subspace& J) {
    Quotient q = quotient(L, K);
    Subspace imN = project_subspace(N, q.projection);
    Subspace imJ = project_subspace(J, q.projection);
    PairContext inner = make_pair_context(q.algebra, imN, imJ);
    return pair_multiplier_dim(inner);
}

}  // namespace

PairContext make_pair_context(const LieAlgebra& L, const Subspace& N,
                              std::optional<Subspace> complement) {
    if (N.ambient_dim() != L.dim())
        throw std::invalid_argument("pair: ambient dimension mismatch");
    if (!is_ideal(L, N)) throw std::invalid_argument("pair: N is not an ideal");
    if (complement) {
        if (complement->ambient_dim() != L.dim())
            throw std::invalid_argument("pair: ambient dimension mismatch");
        if (!is_ideal(L, *complement))
            throw std::invalid_argument("pair: complement is not an ideal");
        if (subspace_sum(N, *complement).dim() != L.dim())
            throw std::invalid_argument("pair: N + complement is not all of L");
        if (subspace_intersection(N, *complement).dim() != 0)
            throw std::invalid_argument("pair: N and complement overlap");
    }
    PairContext ctx{L, N, std::move(complement), L.dim() - N.dim(),
                    bracket_subspaces(L, Subspace::full(L.dim()), N)};
    return ctx;
}

TripleContext make_triple_context(const LieAlgebra& L, const Subspace& I, const Subspace& J,
                                  std::optional<Subspace> K) {
    if (I.ambient_dim() != L.dim() || J.ambient_dim() != L.dim())
        throw std::invalid_argument("triple: ambient dimension mismatch");
    if (!is_ideal(L, I)) throw std::invalid_argument("triple: I is not an ideal");
    if (!is_ideal(L, J)) throw std::invalid_argument("triple: J is not an ideal");
    if (subspace_sum(I, J).dim() != L.dim())
        throw std::invalid_argument("triple: I + J is not all of L");
    if (subspace_intersection(I, J).dim() != 0)
        throw std::invalid_argument("triple: I and J overlap");
    if (K) {
        if (K->ambient_dim() != L.dim())
            throw std::invalid_argument("triple: ambient dimension mismatch");
        if (!J.contains(*K)) throw std::invalid_argument("triple: K is not inside J");
        if (!center(L).contains(*K)) throw std::invalid_argument("triple: K is not central");
    }
    return TripleContext{L, I, J, std::move(K)};
}

long pair_multiplier_dim(const PairContext& ctx) {
    if (!ctx.complement) throw std::invalid_argument("pair_multiplier_dim: complement required");
    return multiplier_dim(ctx.L) - quotient_multiplier(ctx.L, ctx.N);
}

long pair_exterior_dim(const PairContext& ctx) {
    return pair_multiplier_dim(ctx) + ctx.bracketLN.dim();
}

long pair_upper_bound(int nN, int u) {
    if (nN < 0 || u < 0) throw std::invalid_argument("pair_upper_bound: negative argument");
    return long(nN) * (2L * u + nN - 1) / 2;
}

long pair_lower_bound(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("pair_lower_bound: negative argument");
    return long(t) * (2L * s + t - 1) / 2;
}

PairBoundsCheck check_pair_bounds(const PairContext& ctx) {
    if (!ctx.complement) throw std::invalid_argument("check_pair_bounds: complement required");
    if (!is_nilpotent(ctx.L))
        throw std::invalid_argument("check_pair_bounds: algebra is not nilpotent");
    const Subspace phi = derived_subalgebra(ctx.L);  // Frattini = L² (nilpotent)
    PairBoundsCheck r;
    r.s = ctx.L.dim() - subspace_sum(ctx.N, phi).dim();
    r.t = ctx.N.dim() - subspace_intersection(ctx.N, phi).dim();
    r.u = ctx.u;
    r.exterior = pair_exterior_dim(ctx);
    r.lower = pair_lower_bound(r.s, r.t);
    r.upper_dim_n = pair_upper_bound(ctx.N.dim(), r.u);
    r.upper_dim_l = pair_upper_bound(ctx.L.dim(), r.u);
    r.lower_ok = r.lower <= r.exterior;
    r.upper_ok = r.exterior <= r.upper_dim_n;
    return r;
}

long triple_multiplier_dim(const TripleContext& ctx) {
    PairContext pj = make_pair_context(ctx.L, ctx.J, ctx.I);
    return pair_multiplier_dim(pj) - multiplier_dim(subalgebra(ctx.L, ctx.J));
}

InequalityCheck triple_inequality_check(const TripleContext& ctx) {
    if (!ctx.K) throw std::invalid_argument("triple_inequality_check: K required");
    const Subspace& K = *ctx.K;
    const Subspace derived = derived_subalgebra(ctx.L);
    const Subspace bracketLJ = bracket_subspaces(ctx.L, Subspace::full(ctx.L.dim()), ctx.J);

    InequalityCheck r;
    r.lhs = triple_multiplier_dim(ctx) + multiplier_dim(subalgebra(ctx.L, ctx.J)) +
            subspace_intersection(K, bracketLJ).dim();
    r.rhs = pair_multiplier_after_quotient(ctx.L, K, ctx.J, ctx.I) +
            multiplier_dim(subalgebra(ctx.L, K)) +
            long(ctx.L.dim() - subspace_sum(derived, K).dim()) * K.dim();
    r.holds = r.lhs <= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

CentralQuotientCheck central_quotient_check(const LieAlgebra& L, const Subspace& Z) {
    if (Z.ambient_dim() != L.dim())
        throw std::invalid_argument("central_quotient_check: ambient dimension mismatch");
    if (!center(L).contains(Z))
        throw std::invalid_argument("central_quotient_check: subspace is not central");
    const Subspace derived = derived_subalgebra(L);
    CentralQuotientCheck r;
    r.quotient_multiplier = quotient_multiplier(L, Z);
    r.middle = multiplier_dim(L) + subspace_intersection(derived, Z).dim();
    r.upper = r.quotient_multiplier + long(Z.dim()) * (L.dim() - derived.dim());
    r.left_ok = r.quotient_multiplier <= r.middle;
    r.right_ok = r.middle <= r.upper;
    return r;
}

InequalityCheck complement_central_check(const PairContext& ctx, const Subspace& K) {
    if (!ctx.complement)
        throw std::invalid_argument("complement_central_check: complement required");
    if (K.ambient_dim() != ctx.L.dim())
        throw std::invalid_argument("complement_central_check: ambient dimension mismatch");
    if (!ctx.N.contains(K))
        throw std::invalid_argument("complement_central_check: K is not inside N");
    if (!center(ctx.L).contains(K))
        throw std::invalid_argument("complement_central_check: K is not central");
    const Subspace derived = derived_subalgebra(ctx.L);

    InequalityCheck r;
    r.lhs = pair_multiplier_dim(ctx) + subspace_intersection(K, ctx.bracketLN).dim();
    r.rhs = pair_multiplier_after_quotient(ctx.L, K, ctx.N, *ctx.complement) +
            multiplier_dim(subalgebra(ctx.L, K)) +
            long(ctx.L.dim() - subspace_sum(derived, K).dim()) * K.dim();
    r.holds = r.lhs <= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

EpicentralCheck epicentral_consistency(const LieAlgebra& L, const Subspace& Z) {
    if (Z.ambient_dim() != L.dim())
        throw std::invalid_argument("epicentral_consistency: ambient dimension mismatch");
    if (!center(L).contains(Z))
        throw std::invalid_argument("epicentral_consistency: subspace is not central");
    EpicentralCheck r;
    r.lhs = multiplier_dim(L) + subspace_intersection(derived_subalgebra(L), Z).dim();
    r.rhs = quotient_multiplier(L, Z);
    r.consistent = r.lhs == r.rhs;
    return r;
}

}  // namespace schur
