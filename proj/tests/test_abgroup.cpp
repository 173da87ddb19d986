#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "monoidk/abgroup.hpp"

using namespace monoidk;
using testutil::exterior_square_oracle;
using testutil::random_group;
using testutil::resolution_homology_oracle;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo = -9, int hi = 9) {
    IntMatrix m(r, c);
    std::uniform_int_distribution<int> entry(lo, hi);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    return m;
}

bool check_snf(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    if (mat_mul(mat_mul(s.u, m), s.v) != s.s) return false;
    std::vector<Int> d = s.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
    for (int i = 0; i < s.s.rows; ++i)
        for (int j = 0; j < s.s.cols; ++j)
            if (i != j && s.s.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form on fixed inputs") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<Int>{2, 4});
    CHECK(check_snf(m));

    IntMatrix z(3, 2);
    CHECK(smith_normal_form(z).diagonal() == std::vector<Int>{0, 0});

    IntMatrix diag = IntMatrix::diagonal({3, 6});
    CHECK(smith_normal_form(diag).diagonal() == std::vector<Int>{3, 6});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> dim(1, 6);
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
        CHECK(check_snf(m));
        // idempotence
        SmithResult s = smith_normal_form(m);
        CHECK(smith_normal_form(s.s).diagonal() == s.diagonal());
    }
}

TEST_CASE("canonical forms and iso_test") {
    CHECK(FgAbelianGroup::from_summands(0, {2, 3}) == FgAbelianGroup::cyclic(6));
    CHECK_FALSE(iso_test(FgAbelianGroup::cyclic(4), FgAbelianGroup::from_summands(0, {2, 2})));
    CHECK(FgAbelianGroup::from_summands(0, {4, 6}).torsion == std::vector<Int>{2, 12});

    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        IntMatrix m = random_matrix(rng, 4, 5);
        SmithResult s = smith_normal_form(m);
        CHECK(iso_test(cokernel(m), cokernel(s.s)));
    }
}

TEST_CASE("tensor and Tor closed forms") {
    FgAbelianGroup g = FgAbelianGroup::from_summands(2, {3});
    auto [g_z, tor_z] = tensor_tor(g, FgAbelianGroup::free_group(1));
    CHECK(g_z == g);
    CHECK(tor_z.is_trivial());

    auto [t, tor] = tensor_tor(FgAbelianGroup::cyclic(4), FgAbelianGroup::cyclic(6));
    CHECK(t == FgAbelianGroup::cyclic(2));
    CHECK(tor == FgAbelianGroup::cyclic(2));

    auto [g2, tor2] = tensor_tor(g, FgAbelianGroup::cyclic(2));
    CHECK(g2 == FgAbelianGroup::from_summands(0, {2, 2}));
    CHECK(tor2.is_trivial());
}

TEST_CASE("homology fixed values") {
    CHECK(homology(FgAbelianGroup::cyclic(5), 2).is_trivial());
    CHECK(homology(FgAbelianGroup::free_group(2), 2) == FgAbelianGroup::free_group(1));
    CHECK(homology(FgAbelianGroup::from_summands(0, {4, 6}), 2) == FgAbelianGroup::cyclic(2));
    CHECK(homology(FgAbelianGroup::cyclic(6), 3) == FgAbelianGroup::cyclic(6));
    CHECK(homology(FgAbelianGroup::cyclic(6), 0) == FgAbelianGroup::free_group(1));
    CHECK_THROWS(homology(FgAbelianGroup::cyclic(2), 4));
}

TEST_CASE("homology agrees with the resolution-complex oracle") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        FgAbelianGroup g = random_group(rng);
        for (int k = 0; k <= 3; ++k) {
            FgAbelianGroup lib = homology(g, k);
            FgAbelianGroup ora = resolution_homology_oracle(g, k);
            CAPTURE(g.to_string());
            CAPTURE(k);
            CHECK(lib == ora);
        }
    }
}

TEST_CASE("H_2 agrees with the exterior-square formula") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        FgAbelianGroup g = random_group(rng);
        CAPTURE(g.to_string());
        CHECK(homology(g, 2) == exterior_square_oracle(g));
    }
}

TEST_CASE("universal coefficients cardinality check") {
    std::mt19937_64 rng(19);
    auto two_part_order = [](const FgAbelianGroup& g) {
        // |G tensor Z/2|
        Int n = 1;
        for (const Int& d : g.torsion)
            if (d % 2 == 0) n *= 2;
        for (int i = 0; i < g.free_rank; ++i) n *= 2;
        return n;
    };
    for (int t = 0; t < 30; ++t) {
        FgAbelianGroup g = random_group(rng, 3);
        for (int k = 1; k <= 3; ++k) {
            FgAbelianGroup hz2 = homology(g, k, Coefficients::Z2);
            FgAbelianGroup hk = homology(g, k);
            FgAbelianGroup hk1 = homology(g, k - 1);
            Int tor2 = 1;
            for (const Int& d : hk1.torsion)
                if (d % 2 == 0) tor2 *= 2;
            CAPTURE(g.to_string());
            CAPTURE(k);
            CHECK(hz2.free_rank == 0);
            CHECK(hz2.order() == two_part_order(hk) * tor2);
        }
    }
}

TEST_CASE("group spec strings") {
    FgAbelianGroup g = parse_group_spec("free=1;torsion=4,6");
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<Int>{2, 12});
    CHECK(parse_group_spec(group_spec(g)) == g);
    CHECK(parse_group_spec("free=2") == FgAbelianGroup::free_group(2));
    CHECK(parse_group_spec("torsion=5") == FgAbelianGroup::cyclic(5));
}
