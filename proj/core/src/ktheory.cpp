#include "monoidk/ktheory.hpp"

#include <set>

#include "monoidk/monomial.hpp"

namespace monoidk {

FgAbelianGroup k1(const PointedMonoid& a) {
    UnitGroup u = units(a);
    return direct_sum(FgAbelianGroup::cyclic(2), abelianization(u.group));
}

K1BruteForceReport k1_bruteforce_check(const PointedMonoid& a, int n, std::uint64_t size_guard) {
    K1BruteForceReport rep;
    rep.n = n;
    rep.closed_form = k1(a);
    FiniteGroup gl = gl_group(a, n, size_guard);
    rep.gl_order = gl.size();
    rep.gl_abelianization = abelianization(gl);
    rep.equal = iso_test(rep.closed_form, rep.gl_abelianization);
    return rep;
}

FgAbelianGroup k2_abelian(const FgAbelianGroup& g) {
    FgAbelianGroup g_mod_2 = tensor_tor(g, FgAbelianGroup::cyclic(2)).first;
    return direct_sum(FgAbelianGroup::cyclic(2), direct_sum(g_mod_2, homology(g, 2)));
}

FgAbelianGroup pi2s_formula(const FgAbelianGroup& g_ab, const FgAbelianGroup& h2) {
    FgAbelianGroup gab_mod_2 = tensor_tor(g_ab, FgAbelianGroup::cyclic(2)).first;
    return direct_sum(FgAbelianGroup::cyclic(2), direct_sum(gab_mod_2, h2));
}

FreeBasisResult free_basis(const FiniteASet& m) {
    FreeBasisResult res;
    std::vector<int> gens = minimal_generators(m);
    int unit_block = m.monoid->size() - 1;
    if (m.size() != static_cast<int>(gens.size()) * unit_block + 1) {
        res.reason = "carrier size does not match any wedge of copies of the monoid";
        return res;
    }
    std::vector<std::string> labels;
    for (int g : gens) labels.push_back(m.carrier[g]);
    FreeASet f = free_aset(m.monoid, labels);
    ASetPtr mp = std::make_shared<const FiniteASet>(m);
    std::vector<ASetMorphism> isos = aset_isomorphisms(f.aset, mp);
    if (isos.empty()) {
        res.reason = "no isomorphism with the free object on a minimal generating set";
        return res;
    }
    res.free = true;
    for (int gi : f.generator_index) res.basis.push_back(isos.front().map[gi]);
    return res;
}

HomotopyInvarianceReport homotopy_invariance_check(const PointedMonoid& a) {
    HomotopyInvarianceReport rep;
    PolyUnitsReport poly = poly_units(a);
    UnitGroup u = units(a);
    rep.units_isomorphic =
        u.group.size() == poly.units_of_ax.size() && u.group.table == poly.units_of_ax.table;
    rep.k1_a = k1(a);
    rep.k1_ax = direct_sum(FgAbelianGroup::cyclic(2), abelianization(poly.units_of_ax));
    rep.k1_equal = iso_test(rep.k1_a, rep.k1_ax);
    for (const auto& [idx, elem] : poly.bijection)
        rep.unit_bijection.emplace_back(a.labels[idx],
                                        "(" + a.labels[elem.coeff] + ", x^0)");
    return rep;
}

namespace {

/// The cyclic A-set A.e inside the regular representation.
FiniteASet cyclic_aset(const MonoidPtr& a, int e) {
    std::set<int> orbit;
    for (int u = 0; u < a->size(); ++u) orbit.insert(a->mul(u, e));
    orbit.insert(a->zero);
    FiniteASet m;
    m.monoid = a;
    std::vector<int> elems;
    elems.push_back(a->zero);
    for (int x : orbit)
        if (x != a->zero) elems.push_back(x);
    std::vector<int> pos(a->size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    for (int x : elems) m.carrier.push_back(x == a->zero ? "*" : a->labels[x]);
    m.action.resize(static_cast<size_t>(a->size()) * elems.size());
    for (int u = 0; u < a->size(); ++u)
        for (size_t i = 0; i < elems.size(); ++i)
            m.action[static_cast<size_t>(u) * elems.size() + i] = pos[a->mul(u, elems[i])];
    return m;
}

}  // namespace

KReport k_report(const PointedMonoid& a) {
    KReport rep;
    MonoidPtr ap = std::make_shared<const PointedMonoid>(a);
    UnitGroup u = units(a);

    // K0: emitted only when every tested projective is free
    bool proj_is_vec = true;
    for (int e : a.idempotents()) {
        if (e == a.zero || e == a.one) continue;
        FiniteASet ae = cyclic_aset(ap, e);
        ASetPtr aep = std::make_shared<const FiniteASet>(ae);
        if (is_projective(aep).projective && !free_basis(ae).free) proj_is_vec = false;
    }
    for (int r = 1; r <= 2 && proj_is_vec; ++r) {
        std::vector<std::string> gens;
        for (int i = 1; i <= r; ++i) gens.push_back("x" + std::to_string(i));
        if (!is_projective(free_aset(ap, gens).aset).projective) proj_is_vec = false;
    }
    if (proj_is_vec)
        rep.k0 = KReportEntry{FgAbelianGroup::free_group(1),
                              "all tested projectives are free; rank gives the isomorphism"};

    rep.k1 = KReportEntry{k1(a), "Z/2 + abelianized unit group"};

    if (u.group.is_abelian() && u.group.size() + 1 == a.size())
        rep.k2 = KReportEntry{k2_abelian(abelian_invariants(u.group)),
                              "Z/2 + G/2 + H_2(G) for the abelian unit group G"};
    return rep;
}

}  // namespace monoidk
