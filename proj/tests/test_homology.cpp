#include <random>

#include "doctest.h"
#include "schur/catalog.hpp"
#include "schur/constructions.hpp"
#include "schur/homology.hpp"
#include "schur/linalg.hpp"
#include "support.hpp"

using namespace schur;
using test_support::change_basis;
using test_support::random_unimodular;

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("wedge pair indexing is lexicographic") {
    CHECK(wedge_pair_index(4, 0, 1) == 0);
    CHECK(wedge_pair_index(4, 0, 2) == 1);
    CHECK(wedge_pair_index(4, 0, 3) == 2);
    CHECK(wedge_pair_index(4, 1, 2) == 3);
    CHECK(wedge_pair_index(4, 1, 3) == 4);
    CHECK(wedge_pair_index(4, 2, 3) == 5);
    for (int n = 2; n <= 7; ++n) {
        int expect = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) CHECK(wedge_pair_index(n, i, j) == expect++);
        CHECK(expect == choose2(n));
    }
}

TEST_CASE("boundary shapes") {
    for (const LieAlgebra& L : {heisenberg(1), heisenberg(2), filiform(4), abelian(5)}) {
        int n = L.dim();
        Matrix d2 = boundary_d2(L);
        CHECK(d2.rows() == n);
        CHECK(d2.cols() == choose2(n));
        Matrix d3 = boundary_d3(L);
        CHECK(d3.rows() == choose2(n));
        CHECK(d3.cols() == n * (n - 1) * (n - 2) / 6);
    }
}

TEST_CASE("boundary entries for the smallest heisenberg algebra") {
    LieAlgebra h = heisenberg(1);
    Matrix d2 = boundary_d2(h);
    // column (0,1) carries [v1,v2] = v; the other two columns vanish
    CHECK(d2.at(2, wedge_pair_index(3, 0, 1)) == Rational(1));
    CHECK(d2.at(0, 0).is_zero());
    CHECK(d2.at(1, 0).is_zero());
    CHECK(d2.at(2, wedge_pair_index(3, 0, 2)).is_zero());
    CHECK(rank(d2) == 1);

    Matrix d3 = boundary_d3(h);
    // single triple (0,1,2): [v1,v2]^v - [v1,v]^v2 + [v2,v]^v1 = v^v = 0
    CHECK(d3.is_zero());
    CHECK(rank(d3) == 0);
}

TEST_CASE("pinned ranks") {
    CHECK(rank(boundary_d2(heisenberg(2))) == 1);
    CHECK(rank(boundary_d3(heisenberg(2))) == 4);
    CHECK(rank(boundary_d2(filiform(4))) == 2);
    CHECK(rank(boundary_d3(filiform(4))) == 2);
}

TEST_CASE("multiplier dimensions of the standard families") {
    CHECK(multiplier_dim(abelian(0)) == 0);
    CHECK(multiplier_dim(abelian(1)) == 0);
    CHECK(multiplier_dim(abelian(4)) == 6);
    for (int n = 0; n <= 7; ++n) CHECK(multiplier_dim(abelian(n)) == choose2(n));
    CHECK(multiplier_dim(heisenberg(1)) == 2);
    CHECK(multiplier_dim(heisenberg(2)) == 5);
    CHECK(multiplier_dim(heisenberg(3)) == 14);
    CHECK(multiplier_dim(filiform(4)) == 2);
}

TEST_CASE("exterior square dimension") {
    CHECK(exterior_square_dim(heisenberg(1)) == 3);
    CHECK(exterior_square_dim(abelian(4)) == 6);
    for (const LieAlgebra& L : {heisenberg(2), filiform(5), free_nilpotent(2, 3)}) {
        CHECK(exterior_square_dim(L) == multiplier_dim(L) + derived_subalgebra(L).dim());
    }
}

TEST_CASE("composite of successive boundaries vanishes") {
    std::vector<LieAlgebra> algebras{abelian(4),          heisenberg(1),
                                     heisenberg(2),       heisenberg(3),
                                     filiform(4),         filiform(6),
                                     free_nilpotent(2, 3), free_nilpotent(3, 2),
                                     test_support::simple_sl2()};
    for (const LieAlgebra& L : algebras) {
        CHECK((boundary_d2(L) * boundary_d3(L)).is_zero());
    }
}

TEST_CASE("jacobi failure surfaces as a nonzero composite") {
    LieAlgebra bad(3);
    bad.set_bracket_component(0, 1, 2, Rational(1));
    bad.set_bracket_component(0, 2, 0, Rational(1));
    CHECK(!validate(bad).ok);
    CHECK(!(boundary_d2(bad) * boundary_d3(bad)).is_zero());
}

TEST_CASE("multiplier adds across direct sums with a generator correction") {
    std::vector<LieAlgebra> parts;
    for (const CatalogEntry& e : catalog_entries()) {
        LieAlgebra L = catalog_algebra(e.name);
        if (L.dim() <= 5) parts.push_back(L);  // keep the quadratic sweep quick
    }
    CHECK(parts.size() >= 10);
    for (const LieAlgebra& x : parts) {
        for (const LieAlgebra& y : parts) {
            int gx = structural_profile(x).gens;
            int gy = structural_profile(y).gens;
            INFO(x.name(), " + ", y.name());
            CHECK(multiplier_dim(direct_sum(x, y)) ==
                  multiplier_dim(x) + multiplier_dim(y) + gx * gy);
        }
    }
}

TEST_CASE("abelian algebras are exactly the maximal-multiplier ones") {
    for (int n = 0; n <= 6; ++n) CHECK(multiplier_dim(abelian(n)) == choose2(n));
    for (const LieAlgebra& L : {heisenberg(1), heisenberg(2), filiform(4), filiform(5),
                                free_nilpotent(2, 2), free_nilpotent(3, 2)}) {
        CHECK(multiplier_dim(L) < choose2(L.dim()));
    }
}

TEST_CASE("multiplier is a basis invariant") {
    std::mt19937 rng(9001);
    for (const LieAlgebra& L : {heisenberg(1), heisenberg(2), filiform(4), free_nilpotent(2, 3)}) {
        int expect = multiplier_dim(L);
        int expect_ext = exterior_square_dim(L);
        for (int t = 0; t < 4; ++t) {
            auto [p, pinv] = random_unimodular(L.dim(), rng);
            LieAlgebra moved = change_basis(L, p, pinv);
            REQUIRE(validate(moved).ok);
            CHECK(multiplier_dim(moved) == expect);
            CHECK(exterior_square_dim(moved) == expect_ext);
        }
    }
}
