#include <random>
#include <vector>

#include "doctest.h"
#include "schur/linalg.hpp"
#include "schur/rational.hpp"
#include "schur/reference_elim.hpp"
#include "support.hpp"

using namespace schur;
using test_support::random_int_matrix;

namespace {

Matrix mk(const std::vector<std::vector<long>>& rows, int forced_cols = -1) {
    int r = int(rows.size());
    int c = forced_cols >= 0 ? forced_cols : (r ? int(rows[0].size()) : 0);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

std::vector<Rational> vec(const std::vector<long>& v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() > 0);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-3, 7) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

    std::mt19937 rng(7001);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int t = 0; t < 200; ++t) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0 || e == 0) continue;
        Rational sum = Rational(a, b) + Rational(c, e);
        CHECK(sum == Rational(a * e + c * b, b * e));
    }
}

TEST_CASE("rational text form and parsing") {
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("3").value() == Rational(3));
    CHECK(Rational::parse("-7/2").value() == Rational(-7, 2));
    CHECK(Rational::parse("4/2").value() == Rational(2));
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(!Rational::parse("1/-2").has_value());
    CHECK(!Rational::parse("1/").has_value());

    std::mt19937 rng(7002);
    std::uniform_int_distribution<long> d(-99, 99);
    for (int t = 0; t < 100; ++t) {
        long p = d(rng), q = d(rng);
        if (q == 0) continue;
        Rational r(p, q);
        CHECK(Rational::parse(r.str()).value() == r);
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 2)) == 0);
    CHECK(rank(mk({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix(0, 5)) == 0);
    CHECK(rank(Matrix(5, 0)) == 0);
    Matrix frac(2, 2);
    frac.at(0, 0) = Rational(1, 2);
    frac.at(0, 1) = Rational(1, 3);
    frac.at(1, 0) = Rational(3, 2);
    frac.at(1, 1) = Rational(1);
    CHECK(rank(frac) == 1);
}

TEST_CASE("rank + kernel dimension = column count") {
    std::mt19937 rng(7010);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + int(rng() % 7), c = 1 + int(rng() % 7);
        Matrix m = random_int_matrix(r, c, rng, -4, 4);
        Subspace k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == c);
        for (int row = 0; row < k.dim(); ++row) {
            std::vector<Rational> prod(r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) prod[i] += m.at(i, j) * k.basis().at(row, j);
            for (int i = 0; i < r; ++i) CHECK(prod[i].is_zero());
        }
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
    CHECK(kernel_basis(Matrix(1, 3)).dim() == 3);
    Subspace k = kernel_basis(mk({{1, 1, 0}}));
    CHECK(k.dim() == 2);
    CHECK(k.contains(vec({1, -1, 0})));
    CHECK(!k.contains(vec({1, 0, 0})));
}

TEST_CASE("subspace sum") {
    Subspace e0 = Subspace::coordinate_span(3, {0});
    Subspace e1 = Subspace::coordinate_span(3, {1});
    CHECK(subspace_sum(e0, e1).dim() == 2);

    Subspace v = Subspace::from_rows(mk({{1, 2, 3}, {0, 1, 1}}));
    CHECK(subspace_sum(v, v) == v);

    Subspace a = Subspace::from_rows(mk({{1, 1}}));
    Subspace b = Subspace::from_rows(mk({{1, -1}}));
    CHECK(subspace_sum(a, b) == Subspace::full(2));
}

TEST_CASE("subspace intersection") {
    Subspace v = Subspace::from_rows(mk({{1, 2, 3}, {0, 1, 1}}));
    CHECK(subspace_intersection(v, v) == v);

    Subspace e0 = Subspace::coordinate_span(3, {0});
    Subspace e1 = Subspace::coordinate_span(3, {1});
    CHECK(subspace_intersection(e0, e1).dim() == 0);

    Subspace a = Subspace::coordinate_span(3, {0, 1});
    Subspace b = Subspace::coordinate_span(3, {1, 2});
    CHECK(subspace_intersection(a, b) == Subspace::coordinate_span(3, {1}));
}

TEST_CASE("grassmann identity on random subspaces") {
    std::mt19937 rng(7020);
    for (int t = 0; t < 40; ++t) {
        int amb = 2 + int(rng() % 6);
        Subspace a = Subspace::from_rows(random_int_matrix(1 + int(rng() % 4), amb, rng, -3, 3));
        Subspace b = Subspace::from_rows(random_int_matrix(1 + int(rng() % 4), amb, rng, -3, 3));
        CHECK(subspace_sum(a, b).dim() + subspace_intersection(a, b).dim() == a.dim() + b.dim());
        CHECK(subspace_sum(a, b).contains(a));
        CHECK(a.contains(subspace_intersection(a, b)));
    }
}

TEST_CASE("containment") {
    Subspace s = Subspace::from_rows(mk({{1, 1, 0}, {0, 0, 1}}));
    CHECK(s.contains(vec({0, 0, 0})));
    CHECK(s.contains(vec({1, 1, 0})));
    CHECK(s.contains(vec({1, 1, 5})));
    CHECK(!s.contains(vec({1, 0, 0})));
    CHECK(!Subspace::coordinate_span(2, {1}).contains(vec({1, 0})));
    CHECK_THROWS_AS((void)s.contains(vec({1, 0})), std::invalid_argument);
}

TEST_CASE("rank invariance under row scaling and permutation") {
    std::mt19937 rng(7030);
    for (int t = 0; t < 25; ++t) {
        int r = 2 + int(rng() % 5), c = 2 + int(rng() % 5);
        Matrix m = random_int_matrix(r, c, rng, -5, 5);
        int base = rank(m);

        Matrix scaled = m;
        std::uniform_int_distribution<long> nz(1, 7);
        for (int i = 0; i < r; ++i) {
            Rational f(nz(rng), nz(rng));
            if (rng() % 2) f = -f;
            for (int j = 0; j < c; ++j) scaled.at(i, j) = scaled.at(i, j) * f;
        }
        CHECK(rank(scaled) == base);

        Matrix permuted = m;
        for (int i = 0; i < r; ++i) permuted.swap_rows(i, int(rng() % r));
        CHECK(rank(permuted) == base);
    }
}

TEST_CASE("fraction-free rank agrees with naive rational elimination") {
    std::mt19937 rng(7040);
    for (int t = 0; t < 60; ++t) {
        int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
        Matrix m = random_int_matrix(r, c, rng, -9, 9);
        CHECK(rank(m) == reference::rank_naive(m));
    }
    // a few rank-deficient products: rank(A*B) with inner dimension 2
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_int_matrix(5, 2, rng, -4, 4);
        Matrix b = random_int_matrix(2, 6, rng, -4, 4);
        Matrix p = a * b;
        CHECK(rank(p) == reference::rank_naive(p));
        CHECK(rank(p) <= 2);
    }
}

TEST_CASE("rref is canonical") {
    Matrix r1 = rref(mk({{2, 4}, {1, 3}}));
    CHECK(r1 == Matrix::identity(2));

    std::mt19937 rng(7050);
    for (int t = 0; t < 25; ++t) {
        Matrix m = random_int_matrix(2 + int(rng() % 4), 2 + int(rng() % 4), rng, -5, 5);
        Matrix r = rref(m);
        CHECK(rref(r) == r);
        std::vector<int> pivots;
        rref(m, &pivots);
        for (size_t i = 1; i < pivots.size(); ++i) CHECK(pivots[i - 1] < pivots[i]);
    }
}

TEST_CASE("subspace canonical form ignores presentation") {
    std::mt19937 rng(7060);
    for (int t = 0; t < 25; ++t) {
        int amb = 3 + int(rng() % 4);
        Matrix m = random_int_matrix(3, amb, rng, -4, 4);
        Subspace s = Subspace::from_rows(m);

        Matrix two(3, amb);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < amb; ++j) two.at(i, j) = m.at(i, j) * Rational(3, 7);
        two.swap_rows(0, 2);
        CHECK(Subspace::from_rows(two) == s);
    }
}

TEST_CASE("ambient dimension mismatches are rejected") {
    Subspace a = Subspace::full(2);
    Subspace b = Subspace::full(3);
    CHECK_THROWS_AS((void)subspace_sum(a, b), std::invalid_argument);
    CHECK_THROWS_AS((void)subspace_intersection(a, b), std::invalid_argument);
}
