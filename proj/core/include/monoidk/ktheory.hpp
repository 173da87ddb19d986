#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoidk/abgroup.hpp"
#include "monoidk/aset.hpp"
#include "monoidk/monoid.hpp"

namespace monoidk {

/// K_1(A) = Z/2 + (A^x)^ab (closed form for any pointed monoid).
FgAbelianGroup k1(const PointedMonoid& a);

struct K1BruteForceReport {
    FgAbelianGroup closed_form;
    FgAbelianGroup gl_abelianization;
    int n = 0;
    std::uint64_t gl_order = 0;
    bool equal = false;
};

/// Compares the closed form with the abelianization of the finite group GL_n(A).
K1BruteForceReport k1_bruteforce_check(const PointedMonoid& a, int n,
                                       std::uint64_t size_guard = 1000000);

/// K_2(G_*) = Z/2 + G/2 + H_2(G; Z) for f.g. abelian G.
FgAbelianGroup k2_abelian(const FgAbelianGroup& g);

/// pi_2^s(BG_+) = Z/2 + (G^ab tensor Z/2) + H_2(G; Z), with the abelianization
/// and Schur multiplier supplied by the caller.
FgAbelianGroup pi2s_formula(const FgAbelianGroup& g_ab, const FgAbelianGroup& h2);

struct FreeBasisResult {
    bool free = false;
    std::vector<int> basis;  // carrier indices of generators when free
    std::string reason;      // for the non-free verdict
};

/// Decides freeness of a finite A-set and extracts a basis (unique up to left
/// multiplication by units).
FreeBasisResult free_basis(const FiniteASet& m);

struct HomotopyInvarianceReport {
    bool units_isomorphic = false;
    FgAbelianGroup k1_a;
    FgAbelianGroup k1_ax;
    bool k1_equal = false;
    std::vector<std::pair<std::string, std::string>> unit_bijection;  // a -> (a, 0)
};

/// units(A[x]) = units(A) via poly_units, hence K_1(A) = K_1(A[x]).
HomotopyInvarianceReport homotopy_invariance_check(const PointedMonoid& a);

struct KReportEntry {
    FgAbelianGroup value;
    std::string provenance;
};

struct KReport {
    std::optional<KReportEntry> k0, k1, k2;
};

/// K-report for a group monoid G_*: K0 (when the tested projectives are all
/// free), K1 closed form, and K2 when the unit group is abelian.
KReport k_report(const PointedMonoid& a);

}  // namespace monoidk
