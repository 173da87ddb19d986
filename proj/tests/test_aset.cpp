#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "monoidk/aset.hpp"

using namespace monoidk;
using testutil::minimal_congruence_oracle;
using testutil::same_partition;

namespace {

MonoidPtr make_ptr(const PointedMonoid& a) {
    return std::make_shared<const PointedMonoid>(a);
}

std::vector<MonoidPtr> small_monoids() {
    static std::vector<MonoidPtr> ms = [] {
        std::vector<MonoidPtr> v;
        v.push_back(f1_ptr());
        v.push_back(make_ptr(group_monoid(cyclic_group(2))));
        v.push_back(make_ptr(testutil::idempotent_monoid()));
        v.push_back(make_ptr(group_monoid(cyclic_group(3))));
        return v;
    }();
    return ms;
}

}  // namespace

TEST_CASE("free A-sets and validation") {
    MonoidPtr b = f1_ptr();
    FreeASet f3 = free_aset(b, {"x", "y", "z"});
    CHECK(f3.aset->size() == 4);
    CHECK(validate_aset(*f3.aset).empty());

    MonoidPtr z2 = make_ptr(group_monoid(cyclic_group(2)));
    FreeASet f2 = free_aset(z2, {"x", "y"});
    CHECK(f2.aset->size() == 5);
    CHECK(validate_aset(*f2.aset).empty());
    CHECK_THROWS(free_aset(b, {"x", "x"}));

    FiniteASet broken = *f2.aset;
    broken.action[broken.action.size() - 1] = 0;  // breaks the unit axiom or action law
    CHECK_FALSE(validate_aset(broken).empty());
}

TEST_CASE("free universal property: generator assignments extend uniquely") {
    std::mt19937_64 rng(31);
    for (const MonoidPtr& a : small_monoids()) {
        FreeASet f = free_aset(a, {"x", "y"});
        ASetPtr n = testutil::random_aset(rng, a);
        std::vector<ASetMorphism> maps = hom_set(f.aset, n);
        size_t expected = 1;
        for (int i = 0; i < 2; ++i) expected *= n->size();
        CHECK(maps.size() == expected);
        // distinct morphisms restrict to distinct generator assignments
        std::set<std::pair<int, int>> assignments;
        for (const auto& m : maps)
            assignments.insert({m.map[f.generator_index[0]], m.map[f.generator_index[1]]});
        CHECK(assignments.size() == maps.size());
    }
}

TEST_CASE("kernels and cokernels") {
    MonoidPtr b = f1_ptr();
    ASetPtr a1 = free_aset(b, {"x"}).aset;
    ASetPtr a2 = free_aset(b, {"x", "y"}).aset;

    KernelCokernel kid = kernel_cokernel(identity_morphism(a2));
    CHECK(kid.kernel->size() == 1);
    CHECK(kid.cokernel->size() == 1);

    ASetMorphism constant{a2, a1, {0, 0, 0}};
    REQUIRE(is_morphism(constant));
    KernelCokernel kc = kernel_cokernel(constant);
    CHECK(kc.kernel->size() == a2->size());
    CHECK(kc.cokernel->size() == a1->size());

    ASetMorphism incl{a1, a2, {0, 1}};
    REQUIRE(is_morphism(incl));
    KernelCokernel ki = kernel_cokernel(incl);
    CHECK(ki.kernel->size() == 1);
    CHECK(ki.cokernel->size() == 2);  // a copy of A
    CHECK(aset_isomorphisms(ki.cokernel, a1).size() > 0);
}

TEST_CASE("coequalizer equals the exhaustive congruence oracle") {
    // full enumeration over hom-set pairs for a catalog of small A-sets
    std::mt19937_64 rng(37);
    for (const MonoidPtr& a : small_monoids()) {
        std::vector<ASetPtr> catalog;
        catalog.push_back(free_aset(a, {"x"}).aset);
        if (a->size() <= 3) catalog.push_back(free_aset(a, {"x", "y"}).aset);
        catalog.push_back(testutil::random_aset(rng, a));
        int checked = 0;
        for (const ASetPtr& m : catalog)
            for (const ASetPtr& n : catalog) {
                if (n->size() > 6) continue;
                std::vector<ASetMorphism> maps = hom_set(m, n);
                for (const auto& fm : maps)
                    for (const auto& gm : maps) {
                        CoequalizerResult c = coequalizer(fm, gm);
                        CHECK(same_partition(c.congruence.block_of,
                                             minimal_congruence_oracle(fm, gm)));
                        CHECK(is_morphism(c.projection));
                        CHECK(validate_aset(*c.quotient).empty());
                        ++checked;
                    }
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("coequalizer special cases") {
    MonoidPtr b = f1_ptr();
    ASetPtr a2 = free_aset(b, {"x", "y"}).aset;
    ASetMorphism id = identity_morphism(a2);
    CoequalizerResult same = coequalizer(id, id);
    CHECK(same.quotient->size() == a2->size());

    // coequalizer of (inclusion, basepoint map) is the cokernel
    ASetPtr a1 = free_aset(b, {"x"}).aset;
    ASetMorphism incl{a1, a2, {0, 1}};
    ASetMorphism star{a1, a2, {0, 0}};
    CoequalizerResult c = coequalizer(incl, star);
    KernelCokernel kc = kernel_cokernel(incl);
    CHECK(c.quotient->size() == kc.cokernel->size());
    CHECK(aset_isomorphisms(c.quotient, kc.cokernel).size() > 0);
}

TEST_CASE("products and coproducts with universal properties") {
    MonoidPtr b = f1_ptr();
    ASetPtr p3 = free_aset(b, {"x", "y"}).aset;       // size 3
    ASetPtr p4 = free_aset(b, {"x", "y", "z"}).aset;  // size 4

    ProductCoproduct pc = product_coproduct({p3, p4});
    CHECK(pc.product->size() == 12);
    CHECK(pc.coproduct->size() == 6);
    for (const auto& f : pc.projections) CHECK(is_morphism(f));
    for (const auto& f : pc.injections) CHECK(is_morphism(f));

    ProductCoproduct single = product_coproduct({p3});
    CHECK(single.product->size() == 3);
    CHECK(single.coproduct->size() == 3);

    // universal property of the product: cones correspond to maps into it
    std::mt19937_64 rng(41);
    for (const MonoidPtr& a : small_monoids()) {
        ASetPtr m1 = testutil::random_aset(rng, a);
        ASetPtr m2 = testutil::random_aset(rng, a);
        ASetPtr t = free_aset(a, {"t"}).aset;
        ProductCoproduct pp = product_coproduct({m1, m2});
        size_t cones = hom_set(t, m1).size() * hom_set(t, m2).size();
        CHECK(hom_set(t, pp.product).size() == cones);
        // coproduct: maps out correspond to pairs of maps out
        CHECK(hom_set(pp.coproduct, t).size() ==
              hom_set(m1, t).size() * hom_set(m2, t).size());
    }
}

TEST_CASE("hom sets") {
    MonoidPtr b = f1_ptr();
    ASetPtr x = free_aset(b, {"x", "y"}).aset;  // pointed set of size 3
    ASetPtr y = free_aset(b, {"u", "v", "w"}).aset;
    CHECK(hom_set(x, y).size() == 16);  // |Y|^(|X|-1)

    ASetPtr pt = free_aset(b, std::vector<std::string>{}).aset;
    CHECK(hom_set(x, pt).size() == 1);

    // Hom(A, N) = N by evaluation at the generator
    for (const MonoidPtr& a : small_monoids()) {
        ASetPtr free1 = free_aset(a, {"x"}).aset;
        std::mt19937_64 rng(43);
        ASetPtr n = testutil::random_aset(rng, a);
        CHECK(hom_set(free1, n).size() == static_cast<size_t>(n->size()));
    }
}

TEST_CASE("tensor unit and symmetry") {
    for (const MonoidPtr& a : small_monoids()) {
        std::mt19937_64 rng(47);
        ASetPtr n = testutil::random_aset(rng, a);
        BiSet left = as_biset(n);  // (A, F1)
        BiSet reg = regular_biset(a);
        BiSet prod = tensor(reg, left);
        CHECK(prod.size() == n->size());
        // compare underlying left A-sets up to isomorphism
        FiniteASet back;
        back.monoid = a;
        back.carrier = prod.carrier;
        back.action = prod.left_action;
        ASetPtr bp = std::make_shared<const FiniteASet>(back);
        CHECK(aset_isomorphisms(bp, n).size() > 0);

        if (a->is_commutative()) {
            ASetPtr m = testutil::random_aset(rng, a, 1);
            BiSet bm = commutative_biset(m), bn = commutative_biset(n);
            CHECK(tensor(bm, bn).size() == tensor(bn, bm).size());
        }
    }
}

TEST_CASE("tensor associativity cardinalities") {
    std::mt19937_64 rng(53);
    MonoidPtr a = make_ptr(group_monoid(cyclic_group(2)));
    for (int t = 0; t < 10; ++t) {
        BiSet m = commutative_biset(testutil::random_aset(rng, a, 1));
        BiSet n = commutative_biset(testutil::random_aset(rng, a, 1));
        BiSet p = commutative_biset(testutil::random_aset(rng, a, 1));
        CHECK(tensor(tensor(m, n), p).size() == tensor(m, tensor(n, p)).size());
    }
}

TEST_CASE("tensor-Hom adjunction cardinalities") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 50; ++t) {
        const auto ms = small_monoids();
        std::uniform_int_distribution<size_t> pick(0, 1);  // commutative A = B = C
        MonoidPtr a = ms[pick(rng)];
        BiSet m = commutative_biset(testutil::random_aset(rng, a, 1));
        BiSet n = commutative_biset(testutil::random_aset(rng, a, 1));
        BiSet p = commutative_biset(testutil::random_aset(rng, a, 1));
        size_t lhs = biset_morphisms(tensor(m, n), p).size();
        size_t rhs = biset_morphisms(n, hom_biset(m, p)).size();
        CAPTURE(t);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("admissible exactness") {
    MonoidPtr b = f1_ptr();
    ASetPtr k = free_aset(b, {"k"}).aset;
    ASetPtr mid = free_aset(b, {"k", "c"}).aset;
    ASetPtr c = free_aset(b, {"c"}).aset;

    ASetMorphism i{k, mid, {0, 1}};
    ASetMorphism j{mid, c, {0, 0, 1}};
    ExactnessReport rep = is_admissible_exact(i, j);
    CHECK(rep.exact);
    CHECK(rep.split);
    REQUIRE(rep.section.has_value());
    for (int x = 0; x < c->size(); ++x) CHECK(j.map[rep.section->map[x]] == x);

    // collapsing j off its kernel is a normality failure
    ASetPtr c1 = free_aset(b, {"c"}).aset;
    ASetPtr mid3 = free_aset(b, {"k", "c", "d"}).aset;
    ASetMorphism i3{k, mid3, {0, 1}};
    ASetMorphism j3{mid3, c1, {0, 0, 1, 1}};
    ExactnessReport bad = is_admissible_exact(i3, j3);
    CHECK_FALSE(bad.exact);
    CHECK(bad.failure == "normal-failure at j");
}

TEST_CASE("pullbacks") {
    MonoidPtr b = f1_ptr();
    ASetPtr k = free_aset(b, {"x", "y"}).aset;
    ASetPtr m = free_aset(b, {"m"}).aset;
    ASetMorphism f{k, m, {0, 1, 1}};
    PullbackResult along_id = pullback(f, identity_morphism(m));
    CHECK(along_id.object->size() == k->size());
    CHECK(aset_isomorphisms(along_id.object, k).size() > 0);

    // wedge decomposition: pulling K -> K v K' back along K v K' v M' gives K v M'
    ASetPtr kvk = free_aset(b, {"k", "k2"}).aset;
    ASetPtr big = free_aset(b, {"k", "k2", "m"}).aset;
    ASetMorphism mono{free_aset(b, {"k"}).aset, kvk, {0, 1}};
    ASetMorphism epi{big, kvk, {0, 1, 2, 0}};
    REQUIRE(is_admissible_mono(mono));
    REQUIRE(is_admissible_epi(epi));
    PullbackResult pb = pullback(mono, epi);
    CHECK(pb.object->size() == 3);  // K v M' over F1: {*, k, m}
    CHECK(is_admissible_epi(pb.to_src_of_f));
    CHECK(is_admissible_mono(pb.to_src_of_g));
}

TEST_CASE("pullback universal property by full cone enumeration") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 50; ++t) {
        const auto ms = small_monoids();
        std::uniform_int_distribution<size_t> pick(0, ms.size() - 1);
        MonoidPtr a = ms[pick(rng)];
        ASetPtr k = testutil::random_aset(rng, a, 1);
        ASetPtr n = testutil::random_aset(rng, a, 1);
        ASetPtr m = testutil::random_aset(rng, a, 1);
        std::vector<ASetMorphism> fs = hom_set(k, m), gs = hom_set(n, m);
        std::uniform_int_distribution<size_t> pf(0, fs.size() - 1), pg(0, gs.size() - 1);
        ASetMorphism f = fs[pf(rng)], g = gs[pg(rng)];
        PullbackResult pb = pullback(f, g);
        ASetPtr tt = free_aset(a, {"t"}).aset;
        size_t cones = 0;
        for (const auto& p : hom_set(tt, k))
            for (const auto& q : hom_set(tt, n)) {
                bool commutes = true;
                for (int x = 0; x < tt->size(); ++x)
                    if (f.map[p.map[x]] != g.map[q.map[x]]) commutes = false;
                if (commutes) ++cones;
            }
        CHECK(hom_set(tt, pb.object).size() == cones);
    }
}

TEST_CASE("projectivity") {
    MonoidPtr b = f1_ptr();
    CHECK(is_projective(free_aset(b, {"x", "y"}).aset).projective);

    MonoidPtr e3 = make_ptr(testutil::idempotent_monoid());
    CHECK(is_projective(free_aset(e3, {"x"}).aset).projective);

    // Ae = {*, e} is projective but not free over {0, 1, e}
    FiniteASet ae;
    ae.monoid = e3;
    ae.carrier = {"*", "e"};
    ae.action = {0, 0, 0, 1, 0, 1};
    REQUIRE(validate_aset(ae).empty());
    ASetPtr aep = std::make_shared<const FiniteASet>(ae);
    ProjectivityResult pr = is_projective(aep);
    CHECK(pr.projective);
    REQUIRE(pr.section.has_value());
    for (int x = 0; x < aep->size(); ++x) CHECK(pr.cover->map[pr.section->map[x]] == x);

    // a non-projective quotient: collapse the free orbit unevenly
    MonoidPtr z2 = make_ptr(group_monoid(cyclic_group(2)));
    FiniteASet fix;
    fix.monoid = z2;
    fix.carrier = {"*", "m"};
    fix.action = {0, 0, 0, 1, 0, 1};  // g fixes m, so no section into the free cover
    REQUIRE(validate_aset(fix).empty());
    ProjectivityResult nr = is_projective(std::make_shared<const FiniteASet>(fix));
    CHECK_FALSE(nr.projective);
    CHECK_FALSE(nr.reason.empty());
}

TEST_CASE("admissible mono and epi composition closure") {
    std::mt19937_64 rng(67);
    MonoidPtr b = f1_ptr();
    ASetPtr r1 = free_aset(b, {"x"}).aset;
    ASetPtr r2 = free_aset(b, {"x", "y"}).aset;
    ASetPtr r3 = free_aset(b, {"x", "y", "z"}).aset;
    std::vector<ASetMorphism> m12, m23;
    for (const auto& f : hom_set(r1, r2))
        if (is_admissible_mono(f)) m12.push_back(f);
    for (const auto& f : hom_set(r2, r3))
        if (is_admissible_mono(f)) m23.push_back(f);
    for (const auto& f : m12)
        for (const auto& g : m23) CHECK(is_admissible_mono(compose(f, g)));
    std::vector<ASetMorphism> e32, e21;
    for (const auto& f : hom_set(r3, r2))
        if (is_admissible_epi(f)) e32.push_back(f);
    for (const auto& f : hom_set(r2, r1))
        if (is_admissible_epi(f)) e21.push_back(f);
    for (const auto& f : e32)
        for (const auto& g : e21) CHECK(is_admissible_epi(compose(f, g)));
}
