#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur/linalg.hpp"

namespace schur {

/// Finite-dimensional Lie algebra over Q, given by its structure-constant
/// table: [e_i, e_j] = sum_k c(i,j,k) e_k. The table stores both (i,j) and
/// (j,i) entries; validate() enforces antisymmetry and the Jacobi identity.
class LieAlgebra {
public:
    explicit LieAlgebra(int dim, std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Rational& c(int i, int j, int k) const {
        return table_[(size_t(i) * dim_ + j) * dim_ + k];
    }

    /// Sets c(i,j,k) = v and c(j,i,k) = -v. Rejects i == j with v != 0.
    void set_bracket_component(int i, int j, int k, const Rational& v);

    /// Writes a single table entry without the antisymmetric mirror; validate()
    /// reports any inconsistency the caller leaves behind.
    void set_raw_component(int i, int j, int k, const Rational& v);

    /// [x, y] for coordinate vectors.
    std::vector<Rational> bracket(std::span<const Rational> x, std::span<const Rational> y) const;
    /// [x, e_j].
    std::vector<Rational> bracket_with_basis(std::span<const Rational> x, int j) const;
    /// [e_i, e_j] as a coordinate vector.
    std::vector<Rational> basis_bracket(int i, int j) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    Rational& c_mut(int i, int j, int k) {
        return table_[(size_t(i) * dim_ + j) * dim_ + k];
    }

    int dim_;
    std::string name_;
    std::vector<Rational> table_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks antisymmetry and the Jacobi identity exactly; each violation names
/// the offending index triple.
ValidationReport validate(const LieAlgebra& L);

/// Span of all [u, v] with u, v ranging over bases of U and V.
Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& U, const Subspace& V);

/// L^2 = [L, L].
Subspace derived_subalgebra(const LieAlgebra& L);

struct LowerCentralSeries {
    std::vector<Subspace> terms;              // L^1 = L, L^{i+1} = [L, L^i], until stable
    std::optional<int> nilpotency_class;      // empty when the series stabilizes above zero
};

LowerCentralSeries lower_central_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

/// Z(L) = {x : [x, e_j] = 0 for all j}, computed as a kernel.
Subspace center(const LieAlgebra& L);

/// Frattini subalgebra; equals L^2 for nilpotent L. Rejects non-nilpotent input.
Subspace frattini(const LieAlgebra& L);

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;                 // (dim L - dim I) x dim L
    std::vector<int> complement_coords;  // non-pivot coordinates of the ideal basis
};

/// L/I with structure constants induced on the non-pivot coordinate complement
/// of I's echelon basis. Rejects subspaces that are not ideals.
Quotient quotient(const LieAlgebra& L, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& H, const LieAlgebra& K);

bool is_ideal(const LieAlgebra& L, const Subspace& U);

/// Induced structure constants on a bracket-closed subspace, with basis the
/// RREF rows of U. Rejects subspaces with [U, U] not contained in U.
LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& U);

struct StructuralProfile {
    int n = 0;     // dim L
    int m = 0;     // dim L^2
    int d = 0;     // dim Z(L)
    int cls = 0;   // nilpotency class; abelian nonzero = 1, zero algebra = 0
    int gens = 0;  // dim L/L^2
};

/// Rejects non-nilpotent input.
StructuralProfile structural_profile(const LieAlgebra& L);

}  // namespace schur
