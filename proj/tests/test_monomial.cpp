#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "monoidk/monomial.hpp"

using namespace monoidk;
using testutil::dense_equals;
using testutil::dense_mul;
using testutil::to_dense;

namespace {

RowMonomicMatrix random_matrix(std::mt19937_64& rng, const PointedMonoid& a, int r, int c) {
    RowMonomicMatrix m(r, c);
    std::uniform_int_distribution<int> col(0, c);  // c means empty row
    std::uniform_int_distribution<int> elem(0, a.size() - 1);
    for (int i = 0; i < r; ++i) {
        int j = col(rng);
        if (j == c) continue;
        int e = elem(rng);
        if (e == a.zero) continue;
        m.entries[i] = {j, e};
    }
    return m;
}

}  // namespace

TEST_CASE("multiplication agrees with the dense monoid-ring oracle") {
    std::mt19937_64 rng(23);
    for (const PointedMonoid& a : testutil::test_monoids()) {
        for (int t = 0; t < 500; ++t) {
            RowMonomicMatrix l = random_matrix(rng, a, 3, 3);
            RowMonomicMatrix r = random_matrix(rng, a, 3, 3);
            RowMonomicMatrix p = mat_mul(a, l, r);
            CHECK(dense_equals(dense_mul(a, to_dense(l), to_dense(r)), p));
        }
        RowMonomicMatrix m = random_matrix(rng, a, 4, 4);
        CHECK(mat_mul(a, identity_matrix(a, 4), m) == m);
        CHECK(mat_mul(a, m, identity_matrix(a, 4)) == m);
    }
    // permutation matrices over F1 compose as permutations
    PointedMonoid b = f1();
    RowMonomicMatrix swap = permutation_matrix(b, {1, 0});
    CHECK(mat_mul(b, swap, swap) == identity_matrix(b, 2));
}

TEST_CASE("decompose and recompose") {
    PointedMonoid z2 = group_monoid(cyclic_group(2));
    int g = 2;  // the nonidentity unit of (Z/2)*

    RowMonomicMatrix m(2, 2);
    m.entries[0] = {1, g};
    m.entries[1] = {0, z2.one};
    DecomposeResult d = decompose(z2, m);
    REQUIRE(d.invertible());
    CHECK(d.decomposition->perm == std::vector<int>{1, 0});
    CHECK(d.decomposition->diag == std::vector<int>{g, z2.one});
    CHECK(recompose(z2, *d.decomposition) == m);

    DecomposeResult di = decompose(z2, identity_matrix(z2, 2));
    REQUIRE(di.invertible());
    CHECK(di.decomposition->perm == std::vector<int>{0, 1});

    RowMonomicMatrix missing(2, 2);
    missing.entries[0] = {0, z2.one};
    CHECK(decompose(z2, missing).verdict == InvertibleVerdict::MissingRow);

    RowMonomicMatrix repeated(2, 2);
    repeated.entries[0] = {0, z2.one};
    repeated.entries[1] = {0, z2.one};
    CHECK(decompose(z2, repeated).verdict == InvertibleVerdict::RepeatedColumn);

    PointedMonoid e3 = testutil::idempotent_monoid();
    RowMonomicMatrix nonunit(1, 1);
    nonunit.entries[0] = {0, 2};  // e is idempotent, not a unit
    CHECK(decompose(e3, nonunit).verdict == InvertibleVerdict::NonUnitEntry);

    std::mt19937_64 rng(29);
    for (const PointedMonoid& a : testutil::test_monoids())
        for (const RowMonomicMatrix& m2 : enumerate_gl(a, 2)) {
            DecomposeResult dr = decompose(a, m2);
            REQUIRE(dr.invertible());
            CHECK(recompose(a, *dr.decomposition) == m2);
        }
}

TEST_CASE("general linear group enumeration") {
    CHECK(enumerate_gl(f1(), 2).size() == 2);
    CHECK(enumerate_gl(group_monoid(cyclic_group(2)), 3).size() == 48);
    CHECK(enumerate_gl(group_monoid(cyclic_group(3)), 2).size() == 18);
    CHECK_THROWS(enumerate_gl(group_monoid(symmetric_group(3)), 6, 1000));

    // closure under multiplication
    PointedMonoid z2 = group_monoid(cyclic_group(2));
    std::vector<RowMonomicMatrix> gl = enumerate_gl(z2, 2);
    for (const auto& x : gl)
        for (const auto& y : gl)
            CHECK(std::binary_search(gl.begin(), gl.end(), mat_mul(z2, x, y)));
}

TEST_CASE("elementary membership predicate") {
    PointedMonoid b = f1();
    CHECK(in_elementary(b, permutation_matrix(b, {1, 2, 0})));

    PointedMonoid z2 = group_monoid(cyclic_group(2));
    int g = 2;
    RowMonomicMatrix dg(2, 2);
    dg.entries[0] = {0, g};
    dg.entries[1] = {1, z2.one};
    CHECK_FALSE(in_elementary(z2, dg));
    RowMonomicMatrix dgg(2, 2);
    dgg.entries[0] = {0, g};
    dgg.entries[1] = {1, g};  // g^{-1} = g
    CHECK(in_elementary(z2, dgg));

    RowMonomicMatrix zero(2, 2);
    CHECK_THROWS(in_elementary(z2, zero));
}

TEST_CASE("the predicate set is a normal subgroup") {
    for (const PointedMonoid& a :
         {f1(), group_monoid(cyclic_group(2)), group_monoid(cyclic_group(3))})
        for (int n = 2; n <= 4; ++n) {
            std::vector<RowMonomicMatrix> gl = enumerate_gl(a, n);
            std::vector<RowMonomicMatrix> e;
            for (const auto& m : gl)
                if (in_elementary(a, m)) e.push_back(m);
            for (const auto& x : e)
                for (const auto& y : e)
                    CHECK(std::binary_search(e.begin(), e.end(), mat_mul(a, x, y)));
            for (const auto& g : gl) {
                DecomposeResult d = decompose(a, g);
                MonomialDecomposition inv;
                inv.perm.resize(n);
                inv.diag.resize(n);
                UnitGroup u = units(a);
                std::vector<int> minv(a.size(), -1);
                for (size_t i = 0; i < u.monoid_index.size(); ++i)
                    minv[u.monoid_index[i]] =
                        u.monoid_index[u.group.inv(static_cast<int>(i))];
                for (int i = 0; i < n; ++i) {
                    inv.perm[d.decomposition->perm[i]] = i;
                    inv.diag[d.decomposition->perm[i]] = minv[d.decomposition->diag[i]];
                }
                RowMonomicMatrix gi = recompose(a, inv);
                CHECK(mat_mul(a, g, gi) == identity_matrix(a, n));
                for (const auto& x : e)
                    CHECK(std::binary_search(e.begin(), e.end(),
                                             mat_mul(a, mat_mul(a, g, x), gi)));
            }
        }
}

TEST_CASE("brute-force elementary subgroup") {
    CHECK(brute_elementary(f1(), 3).size() == 3);   // even permutations
    CHECK(brute_elementary(f1(), 2).size() == 1);   // GL_2(F1) is abelian
    CHECK(brute_elementary(group_monoid(cyclic_group(2)), 3).size() == 12);

    // equality with the predicate at n = 3
    for (const PointedMonoid& a :
         {f1(), group_monoid(cyclic_group(2)), group_monoid(cyclic_group(3))}) {
        std::vector<RowMonomicMatrix> brute = brute_elementary(a, 3);
        std::vector<RowMonomicMatrix> pred;
        for (const auto& m : enumerate_gl(a, 3))
            if (in_elementary(a, m)) pred.push_back(m);
        CHECK(brute == pred);
    }
}

TEST_CASE("abstract group table of GL_n") {
    FiniteGroup gl = gl_group(group_monoid(cyclic_group(2)), 2);
    CHECK(gl.size() == 8);
    CHECK(validate_group(gl).empty());
}
