// Command-line front end for the monoid K-theory library.
// Every subcommand prints a JSON report; exit codes: 0 success,
// 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monoidk/io.hpp"
#include "monoidk/ktheory.hpp"
#include "monoidk/qcat.hpp"
#include "monoidk/steinberg.hpp"

using namespace monoidk;

namespace {

std::uint64_t size_guard_from_env() {
    const char* v = std::getenv("MONOIDK_SIZE_GUARD");
    if (!v) return 1000000;
    return std::strtoull(v, nullptr, 10);
}

PointedMonoid load_monoid(const std::string& path) {
    return monoid_from_json(load_json(path));
}

int emit(Json& report, const std::chrono::steady_clock::time_point& start, bool ok) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    report["ok"] = ok;
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

Json sigma_report_json(const SigmaAuditReport& s) {
    Json j;
    j["relation_cases"] = s.relation_cases;
    j["relation_failures"] = s.relation_failures;
    j["composition_cases"] = s.composition_cases;
    j["composition_failures"] = s.composition_failures;
    j["automorphism_cases"] = s.automorphism_cases;
    j["automorphism_failures"] = s.automorphism_failures;
    if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic K-theory of pointed monoids"};
    app.require_subcommand(1);
    std::uint64_t guard = size_guard_from_env();
    std::uint64_t seed = 20240901;
    app.add_option("--seed", seed, "seed for randomized audits");

    std::string monoid_path, aset_path, matrix_path, group_spec_str, gab_spec, h2_spec, word,
        suite = "all";
    int n = 3, rank_bound = 2, d = 0;

    auto* c_validate = app.add_subcommand("validate", "check monoid or A-set axioms");
    c_validate->add_option("--monoid", monoid_path);
    c_validate->add_option("--aset", aset_path);

    auto* c_units = app.add_subcommand("units", "unit group of a monoid");
    c_units->add_option("--monoid", monoid_path)->required();

    auto* c_k1 = app.add_subcommand("k1", "K_1 closed form");
    c_k1->add_option("--monoid", monoid_path)->required();

    auto* c_check_k1 = app.add_subcommand("check-k1", "K_1 vs GL_n abelianization");
    c_check_k1->add_option("--monoid", monoid_path)->required();
    c_check_k1->add_option("--n", n);

    auto* c_k2ab = app.add_subcommand("k2-ab", "K_2 of a group monoid over an abelian group");
    c_k2ab->add_option("--group", group_spec_str)->required();

    auto* c_pi2s = app.add_subcommand("pi2s", "stable pi_2 formula");
    c_pi2s->add_option("--gab", gab_spec)->required();
    c_pi2s->add_option("--h2", h2_spec)->required();

    auto* c_homotopy = app.add_subcommand("check-homotopy", "units and K_1 of A[x] vs A");
    c_homotopy->add_option("--monoid", monoid_path)->required();

    auto* c_member = app.add_subcommand("e-membership", "elementary subgroup membership");
    c_member->add_option("--monoid", monoid_path)->required();
    c_member->add_option("--matrix", matrix_path)->required();

    auto* c_qpi1 = app.add_subcommand("q-pi1", "edge-path group of the span category nerve");
    c_qpi1->add_option("--monoid", monoid_path)->required();
    c_qpi1->add_option("--rank-bound", rank_bound);

    auto* c_mnf = app.add_subcommand("m-nf", "standard form in the presented group");
    c_mnf->add_option("--d", d)->required();
    c_mnf->add_option("--word", word)->required();

    auto* c_mcheck = app.add_subcommand("m-check", "relation and action audit");
    c_mcheck->add_option("--d", d)->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite);
    c_verify->add_option("--monoid", monoid_path)->required();
    c_verify->add_option("--n", n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Json report;
    report["seed"] = seed;

    try {
        if (*c_validate) {
            std::vector<ValidationIssue> issues;
            if (!monoid_path.empty()) {
                report["input"] = monoid_path;
                Json j = load_json(monoid_path);
                try {
                    monoid_from_json(j);
                } catch (const std::exception& e) {
                    issues.push_back({"parse", e.what()});
                }
            } else if (!aset_path.empty()) {
                report["input"] = aset_path;
                try {
                    aset_from_json(load_json(aset_path),
                                   std::filesystem::path(aset_path).parent_path().string());
                } catch (const std::exception& e) {
                    issues.push_back({"parse", e.what()});
                }
            } else {
                std::cerr << "validate: need --monoid or --aset\n";
                return 2;
            }
            Json ji = Json::array();
            for (const auto& i : issues) ji.push_back({{"kind", i.kind}, {"detail", i.detail}});
            report["issues"] = ji;
            return emit(report, start, issues.empty());
        }
        if (*c_units) {
            PointedMonoid a = load_monoid(monoid_path);
            UnitGroup u = units(a);
            report["input"] = monoid_path;
            Json labels = Json::array();
            for (int i : u.monoid_index) labels.push_back(a.labels[i]);
            report["units"] = labels;
            report["order"] = u.group.size();
            report["abelian"] = u.group.is_abelian();
            return emit(report, start, true);
        }
        if (*c_k1) {
            PointedMonoid a = load_monoid(monoid_path);
            report["input"] = monoid_path;
            report["group"] = group_to_json(k1(a));
            report["provenance"] = "Z/2 + abelianized unit group";
            return emit(report, start, true);
        }
        if (*c_check_k1) {
            PointedMonoid a = load_monoid(monoid_path);
            K1BruteForceReport r = k1_bruteforce_check(a, n, guard);
            report["input"] = monoid_path;
            report["n"] = r.n;
            report["gl_order"] = r.gl_order;
            report["closed_form"] = group_to_json(r.closed_form);
            report["gl_abelianization"] = group_to_json(r.gl_abelianization);
            report["provenance"] = "closed form vs brute-force GL_n abelianization";
            return emit(report, start, r.equal);
        }
        if (*c_k2ab) {
            FgAbelianGroup g = parse_group_spec(group_spec_str);
            report["input"] = group_spec_str;
            report["group"] = group_to_json(k2_abelian(g));
            report["provenance"] = "Z/2 + G/2 + H_2(G)";
            return emit(report, start, true);
        }
        if (*c_pi2s) {
            FgAbelianGroup gab = parse_group_spec(gab_spec);
            FgAbelianGroup h2 = parse_group_spec(h2_spec);
            report["input"] = Json{{"gab", gab_spec}, {"h2", h2_spec}};
            report["group"] = group_to_json(pi2s_formula(gab, h2));
            report["provenance"] = "Z/2 + (G_ab tensor Z/2) + H_2";
            return emit(report, start, true);
        }
        if (*c_homotopy) {
            PointedMonoid a = load_monoid(monoid_path);
            HomotopyInvarianceReport r = homotopy_invariance_check(a);
            report["input"] = monoid_path;
            report["units_isomorphic"] = r.units_isomorphic;
            report["k1"] = group_to_json(r.k1_a);
            report["k1_of_polynomial_extension"] = group_to_json(r.k1_ax);
            Json bij = Json::array();
            for (const auto& [from, to] : r.unit_bijection)
                bij.push_back(Json::array({from, to}));
            report["unit_bijection"] = bij;
            return emit(report, start, r.units_isomorphic && r.k1_equal);
        }
        if (*c_member) {
            PointedMonoid a = load_monoid(monoid_path);
            RowMonomicMatrix m = matrix_from_json(load_json(matrix_path), a);
            report["input"] = Json{{"monoid", monoid_path}, {"matrix", matrix_path}};
            DecomposeResult dec = decompose(a, m);
            if (!dec.invertible()) {
                report["invertible"] = false;
                report["elementary"] = false;
                return emit(report, start, true);
            }
            report["invertible"] = true;
            report["elementary"] = in_elementary(a, m);
            Json diag = Json::array(), perm = Json::array();
            for (int e : dec.decomposition->diag) diag.push_back(a.labels[e]);
            for (int p : dec.decomposition->perm) perm.push_back(p);
            report["diag"] = diag;
            report["perm"] = perm;
            return emit(report, start, true);
        }
        if (*c_qpi1) {
            PointedMonoid a = load_monoid(monoid_path);
            MonoidPtr ap = std::make_shared<const PointedMonoid>(std::move(a));
            Nerve nerve = build_nerve(ap, rank_bound, guard);
            EdgePathPresentation pres = pi1_presentation(nerve);
            report["input"] = monoid_path;
            report["rank_bound"] = rank_bound;
            report["edges"] = nerve.edges.size();
            report["triangles"] = nerve.triangles.size();
            report["generators"] = pres.generator_edge.size();
            report["relators"] = pres.relators.size();
            report["abelianization"] = group_to_json(pres.abelianization);
            report["generator_weights"] = pres.generator_weights;
            report["rank_hom_well_defined"] = pres.rank_hom_well_defined;
            report["rank_hom_surjective"] = pres.rank_hom_surjective;
            report["wedge_relation_holds"] = pres.wedge_relation_holds;
            bool ok = pres.rank_hom_well_defined && pres.rank_hom_surjective &&
                      pres.wedge_relation_holds;
            return emit(report, start, ok);
        }
        if (*c_mnf) {
            MGroupElement x = parse_m_word(d, word);
            report["input"] = Json{{"d", d}, {"word", word}};
            report["standard_form"] = m_standard_form(x);
            return emit(report, start, true);
        }
        if (*c_mcheck) {
            MGroupAuditReport r = m_group_audit(d, seed);
            report["d"] = d;
            report["associativity"] = r.associativity;
            report["relations"] = r.relations;
            report["alpha_order"] = alpha_order(d);
            report["kernel_order"] = r.kernel_order;
            report["parity_audit"] = r.parity_audit;
            report["sigma"] = sigma_report_json(r.sigma);
            bool action_clean = r.sigma.composition_failures == 0 &&
                                r.sigma.automorphism_failures == 0;
            report["sigma_action_well_defined"] = action_clean;
            // the verbatim index-1 rule fails to define an action exactly
            // when d = 2 mod 4; the audit records this instead of patching it
            bool action_expected_clean = (d % 4) != 2;
            report["sigma_action_expected_well_defined"] = action_expected_clean;
            bool ok = r.associativity && r.relations && r.alpha_order_matches &&
                      r.sigma.relation_failures == 0 &&
                      r.kernel_order == static_cast<std::uint64_t>(alpha_order(d)) &&
                      r.parity_audit && action_clean == action_expected_clean;
            return emit(report, start, ok);
        }
        if (*c_verify) {
            PointedMonoid a = load_monoid(monoid_path);
            report["input"] = monoid_path;
            report["suite"] = suite;
            Json checks = Json::object();
            bool ok = true;
            checks["valid"] = validate_monoid(a).empty();
            K1BruteForceReport k1r = k1_bruteforce_check(a, n, guard);
            checks["k1_bruteforce"] = k1r.equal;
            ok = ok && k1r.equal;
            HomotopyInvarianceReport hr = homotopy_invariance_check(a);
            checks["homotopy_invariance"] = hr.units_isomorphic && hr.k1_equal;
            ok = ok && hr.units_isomorphic && hr.k1_equal;
            std::vector<RowMonomicMatrix> brute = brute_elementary(a, n, guard);
            bool membership = true;
            for (const auto& m : enumerate_gl(a, n, guard))
                if (in_elementary(a, m) !=
                    std::binary_search(brute.begin(), brute.end(), m))
                    membership = false;
            checks["elementary_membership"] = membership;
            ok = ok && membership;
            // module-of-A-sets suite over this monoid
            MonoidPtr ap = std::make_shared<const PointedMonoid>(a);
            FreeASet f2 = free_aset(ap, {"x", "y"});
            FreeASet f1g = free_aset(ap, {"x"});
            bool aset_ok = validate_aset(*f2.aset).empty();
            aset_ok = aset_ok && free_basis(*f2.aset).free;
            KernelCokernel kc = kernel_cokernel(identity_morphism(f2.aset));
            aset_ok = aset_ok && kc.kernel->size() == 1 && kc.cokernel->size() == 1;
            ASetMorphism id2 = identity_morphism(f2.aset);
            aset_ok = aset_ok && coequalizer(id2, id2).quotient->size() == f2.aset->size();
            ProductCoproduct pc = product_coproduct({f1g.aset, f1g.aset});
            aset_ok = aset_ok &&
                      pc.product->size() == f1g.aset->size() * f1g.aset->size() &&
                      pc.coproduct->size() == 2 * f1g.aset->size() - 1;
            aset_ok = aset_ok &&
                      tensor(regular_biset(ap), as_biset(f1g.aset)).size() ==
                          f1g.aset->size();
            aset_ok = aset_ok &&
                      hom_set(f1g.aset, f2.aset).size() ==
                          static_cast<size_t>(f2.aset->size());
            aset_ok = aset_ok && pullback(id2, id2).object->size() == f2.aset->size();
            ASetMorphism incl{f1g.aset, f2.aset, {}};
            incl.map.resize(f1g.aset->size());
            for (int x = 0; x < f1g.aset->size(); ++x) incl.map[x] = x;
            KernelCokernel kci = kernel_cokernel(incl);
            aset_ok = aset_ok && is_admissible_exact(incl, kci.projection).exact;
            aset_ok = aset_ok && is_projective(f2.aset).projective;
            checks["aset_suite"] = aset_ok;
            ok = ok && aset_ok;
            report["checks"] = checks;
            return emit(report, start, ok);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
