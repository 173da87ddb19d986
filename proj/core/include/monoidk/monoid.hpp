#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidk/abgroup.hpp"

namespace monoidk {

/// Finite pointed monoid given by a multiplication table. Element 0 of the
/// table is whatever index `zero` says; labels are the external identity,
/// indices the internal one.
struct PointedMonoid {
    std::vector<std::string> labels;
    std::vector<int> table;  // table[i * size + j] = index of labels[i] * labels[j]
    int zero = -1;
    int one = -1;

    int size() const { return static_cast<int>(labels.size()); }
    int mul(int a, int b) const { return table[static_cast<size_t>(a) * labels.size() + b]; }
    bool is_idempotent(int a) const { return mul(a, a) == a; }
    bool is_commutative() const;
    std::vector<int> idempotents() const;  // includes 0 and 1

    bool operator==(const PointedMonoid& o) const = default;
};

struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<int> table;
    int identity = 0;
    std::vector<int> inverse;

    int size() const { return static_cast<int>(labels.size()); }
    int mul(int a, int b) const { return table[static_cast<size_t>(a) * labels.size() + b]; }
    int inv(int a) const { return inverse[a]; }
    int order_of(int a) const;
    bool is_abelian() const;

    bool operator==(const FiniteGroup& o) const = default;
};

struct ValidationIssue {
    std::string kind;  // "structure", "associativity", "absorbing", "unit", ...
    std::string detail;
};

/// Empty report iff the candidate satisfies all pointed-monoid axioms.
std::vector<ValidationIssue> validate_monoid(const PointedMonoid& m);
std::vector<ValidationIssue> validate_group(const FiniteGroup& g);

/// G u {*} with * absorbing; units of the result are G.
PointedMonoid group_monoid(const FiniteGroup& g);

struct UnitGroup {
    FiniteGroup group;
    std::vector<int> monoid_index;  // group index -> monoid index
};

UnitGroup units(const PointedMonoid& m);

/// Indices (into g) of the smallest subgroup containing all commutators,
/// sorted ascending.
std::vector<int> commutator_subgroup_elements(const FiniteGroup& g);
FiniteGroup commutator_subgroup(const FiniteGroup& g);

/// Quotient of g by the normal subgroup listed in `normal` (indices).
FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal);

/// Invariant factors of a finite abelian group given by its table.
FgAbelianGroup abelian_invariants(const FiniteGroup& g);

FgAbelianGroup abelianization(const FiniteGroup& g);

// --- A[x] ---------------------------------------------------------------

/// Element of A[x]: zero, or (coefficient, degree) with nonzero coefficient.
struct PolyElement {
    bool zero = true;
    int coeff = -1;   // index into A, nonzero there
    long degree = 0;  // meaningful only when !zero

    bool operator==(const PolyElement& o) const {
        return zero == o.zero && (zero || (coeff == o.coeff && degree == o.degree));
    }
};

PolyElement poly_mul(const PointedMonoid& a, const PolyElement& x, const PolyElement& y);

struct PolyUnitsReport {
    FiniteGroup units_of_ax;                           // isomorphic copy of units(A)
    std::vector<std::pair<int, PolyElement>> bijection;  // monoid unit index -> (a, 0)
    std::vector<std::pair<int, PolyElement>> idempotents;  // idempotent of A -> (e, 0)
};

/// Unit group of A[x]: exactly the degree-0 units of A. Also reports the
/// idempotents of A[x], which arise from idempotents of A at degree 0.
PolyUnitsReport poly_units(const PointedMonoid& a);

// --- Builders used across the library and the test suites ----------------

PointedMonoid f1();
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Table-level realization of a f.g. abelian group; must be finite.
FiniteGroup abelian_group_table(const FgAbelianGroup& g);

}  // namespace monoidk
