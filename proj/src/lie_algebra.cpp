#include "schur/lie_algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace schur {

LieAlgebra::LieAlgebra(int dim, std::string name)
    : dim_(dim), name_(std::move(name)), table_(size_t(dim) * dim * dim) {
    if (dim < 0)
        throw std::invalid_argument("LieAlgebra: negative dimension");
}

void LieAlgebra::set_bracket_component(int i, int j, int k, const Rational& v) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("LieAlgebra: index out of range");
    if (i == j && !v.is_zero())
        throw std::invalid_argument("LieAlgebra: [e_i, e_i] must vanish");
    c_mut(i, j, k) = v;
    if (i != j)
        c_mut(j, i, k) = -v;
}

void LieAlgebra::set_raw_component(int i, int j, int k, const Rational& v) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("LieAlgebra: index out of range");
    c_mut(i, j, k) = v;
}

std::vector<Rational> LieAlgebra::basis_bracket(int i, int j) const {
    std::vector<Rational> z(dim_);
    for (int k = 0; k < dim_; ++k)
        z[k] = c(i, j, k);
    return z;
}

std::vector<Rational> LieAlgebra::bracket_with_basis(std::span<const Rational> x, int j) const {
    std::vector<Rational> z(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int k = 0; k < dim_; ++k) {
            const Rational& cc = c(i, j, k);
            if (!cc.is_zero())
                z[k] += x[i] * cc;
        }
    }
    return z;
}

std::vector<Rational> LieAlgebra::bracket(std::span<const Rational> x,
                                          std::span<const Rational> y) const {
    std::vector<Rational> z(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            const Rational f = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                const Rational& cc = c(i, j, k);
                if (!cc.is_zero())
                    z[k] += f * cc;
            }
        }
    }
    return z;
}

ValidationReport validate(const LieAlgebra& L) {
    ValidationReport rep;
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (L.c(i, j, k) != -L.c(j, i, k)) {
                    rep.violations.push_back("antisymmetry violated at (" + std::to_string(i) +
                                             "," + std::to_string(j) + "," + std::to_string(k) +
                                             ")");
                    break;
                }

    std::vector<std::array<int, 3>> bad;
#pragma omp parallel for schedule(dynamic) if (n >= 12)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rational> s = L.bracket_with_basis(L.basis_bracket(i, j), k);
                std::vector<Rational> t = L.bracket_with_basis(L.basis_bracket(j, k), i);
                std::vector<Rational> u = L.bracket_with_basis(L.basis_bracket(k, i), j);
                bool zero = true;
                for (int a = 0; a < n && zero; ++a)
                    zero = (s[a] + t[a] + u[a]).is_zero();
                if (!zero) {
#pragma omp critical
                    bad.push_back({i, j, k});
                }
            }
    }
    std::sort(bad.begin(), bad.end());
    for (auto [i, j, k] : bad)
        rep.violations.push_back("Jacobi violated at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
    rep.ok = rep.violations.empty();
    return rep;
}

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim())
        throw std::invalid_argument("bracket_subspaces: ambient dimension mismatch");
    Matrix rows(U.dim() * V.dim(), L.dim());
    int out = 0;
    for (int a = 0; a < U.dim(); ++a)
        for (int b = 0; b < V.dim(); ++b) {
            std::vector<Rational> w = L.bracket(U.basis().row(a), V.basis().row(b));
            for (int k = 0; k < L.dim(); ++k)
                rows.at(out, k) = w[k];
            ++out;
        }
    return Subspace::from_rows(rows);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
    const Subspace full = Subspace::full(L.dim());
    return bracket_subspaces(L, full, full);
}

LowerCentralSeries lower_central_series(const LieAlgebra& L) {
    LowerCentralSeries s;
    const Subspace full = Subspace::full(L.dim());
    s.terms.push_back(full);
    while (s.terms.back().dim() > 0) {
        Subspace next = bracket_subspaces(L, full, s.terms.back());
        if (next == s.terms.back())
            break;  // stabilized above zero: not nilpotent
        s.terms.push_back(next);
    }
    if (s.terms.back().dim() == 0)
        s.nilpotency_class = int(s.terms.size()) - 1;
    return s;
}

bool is_nilpotent(const LieAlgebra& L) {
    return lower_central_series(L).nilpotency_class.has_value();
}

Subspace center(const LieAlgebra& L) {
    const int n = L.dim();
    Matrix sys(n * n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                sys.at(j * n + k, i) = L.c(i, j, k);
    return kernel_basis(sys);
}

Subspace frattini(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw std::invalid_argument("frattini: algebra is not nilpotent");
    return derived_subalgebra(L);
}

bool is_ideal(const LieAlgebra& L, const Subspace& U) {
    return U.contains(bracket_subspaces(L, Subspace::full(L.dim()), U));
}

Quotient quotient(const LieAlgebra& L, const Subspace& ideal) {
    if (!is_ideal(L, ideal))
        throw std::invalid_argument("quotient: subspace is not an ideal");
    const int n = L.dim();
    const int k = ideal.dim();
    const int q = n - k;

    std::vector<bool> is_pivot(n, false);
    for (int p : ideal.pivots())
        is_pivot[p] = true;
    std::vector<int> comp;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c])
            comp.push_back(c);

    Matrix proj(q, n);
    for (int a = 0; a < q; ++a) {
        proj.at(a, comp[a]) = Rational(1);
        for (int r = 0; r < k; ++r)
            proj.at(a, ideal.pivots()[r]) = -ideal.basis().at(r, comp[a]);
    }

    LieAlgebra Q(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            std::vector<Rational> w = ideal.reduce(L.basis_bracket(comp[a], comp[b]));
            for (int t = 0; t < q; ++t)
                if (!w[comp[t]].is_zero())
                    Q.set_bracket_component(a, b, t, w[comp[t]]);
        }
    return Quotient{std::move(Q), std::move(proj), std::move(comp)};
}

LieAlgebra direct_sum(const LieAlgebra& H, const LieAlgebra& K) {
    std::string name;
    if (!H.name().empty() && !K.name().empty())
        name = H.name() + "+" + K.name();
    LieAlgebra S(H.dim() + K.dim(), std::move(name));
    for (int i = 0; i < H.dim(); ++i)
        for (int j = i + 1; j < H.dim(); ++j)
            for (int k = 0; k < H.dim(); ++k)
                if (!H.c(i, j, k).is_zero())
                    S.set_bracket_component(i, j, k, H.c(i, j, k));
    const int off = H.dim();
    for (int i = 0; i < K.dim(); ++i)
        for (int j = i + 1; j < K.dim(); ++j)
            for (int k = 0; k < K.dim(); ++k)
                if (!K.c(i, j, k).is_zero())
                    S.set_bracket_component(off + i, off + j, off + k, K.c(i, j, k));
    return S;
}

LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& U) {
    if (U.ambient_dim() != L.dim())
        throw std::invalid_argument("subalgebra: ambient dimension mismatch");
    const int r = U.dim();
    LieAlgebra S(r);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            std::vector<Rational> w = L.bracket(U.basis().row(a), U.basis().row(b));
            if (!U.contains(w))
                throw std::invalid_argument("subalgebra: subspace is not bracket-closed");
            // RREF basis: the coefficient along row g is the pivot coordinate.
            for (int g = 0; g < r; ++g)
                if (!w[U.pivots()[g]].is_zero())
                    S.set_bracket_component(a, b, g, w[U.pivots()[g]]);
        }
    return S;
}

StructuralProfile structural_profile(const LieAlgebra& L) {
    LowerCentralSeries s = lower_central_series(L);
    if (!s.nilpotency_class)
        throw std::invalid_argument("structural_profile: algebra is not nilpotent");
    StructuralProfile p;
    p.n = L.dim();
    p.m = derived_subalgebra(L).dim();
    p.d = center(L).dim();
    p.cls = *s.nilpotency_class;
    p.gens = p.n - p.m;
    return p;
}

}  // namespace schur
