#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidk/monoid.hpp"

namespace monoidk {

/// m x n matrix over A with at most one nonzero entry per row.
/// entries[i] is nullopt (zero row) or {column, element index}, where the
/// element is nonzero in A.
struct RowMonomicMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::optional<std::pair<int, int>>> entries;

    RowMonomicMatrix() = default;
    RowMonomicMatrix(int r, int c) : rows(r), cols(c), entries(r) {}

    bool operator==(const RowMonomicMatrix& o) const = default;
    bool operator<(const RowMonomicMatrix& o) const;
};

RowMonomicMatrix identity_matrix(const PointedMonoid& a, int n);
RowMonomicMatrix permutation_matrix(const PointedMonoid& a, const std::vector<int>& perm);

RowMonomicMatrix mat_mul(const PointedMonoid& a, const RowMonomicMatrix& l,
                         const RowMonomicMatrix& r);

/// Invertible square matrix written as D(a_1,...,a_n) * sigma: the entry a_i
/// sits at position (i, perm[i]) and every a_i is a unit.
struct MonomialDecomposition {
    std::vector<int> diag;  // element indices, all units
    std::vector<int> perm;  // perm[i] = column of row i's entry
};

enum class InvertibleVerdict { Invertible, MissingRow, RepeatedColumn, NonUnitEntry };

struct DecomposeResult {
    InvertibleVerdict verdict = InvertibleVerdict::Invertible;
    int witness_row = -1;  // offending row for a failure verdict
    std::optional<MonomialDecomposition> decomposition;

    bool invertible() const { return verdict == InvertibleVerdict::Invertible; }
};

DecomposeResult decompose(const PointedMonoid& a, const RowMonomicMatrix& m);
RowMonomicMatrix recompose(const PointedMonoid& a, const MonomialDecomposition& d);

bool is_even_permutation(const std::vector<int>& perm);

/// All of GL_n(A); throws when |A^x|^n * n! exceeds size_guard.
std::vector<RowMonomicMatrix> enumerate_gl(const PointedMonoid& a, int n,
                                           std::uint64_t size_guard = 1000000);

/// Prop-2.4-style membership: even permutation part, diagonal product (in
/// index order) in [A^x, A^x]. Throws on non-invertible input.
bool in_elementary(const PointedMonoid& a, const RowMonomicMatrix& m);

/// Commutator-closure subgroup of GL_n(A), canonically sorted.
std::vector<RowMonomicMatrix> brute_elementary(const PointedMonoid& a, int n,
                                               std::uint64_t size_guard = 1000000);

/// GL_n(A) as an abstract multiplication table (for abelianization etc).
FiniteGroup gl_group(const PointedMonoid& a, int n, std::uint64_t size_guard = 1000000);

std::string matrix_to_string(const PointedMonoid& a, const RowMonomicMatrix& m);

}  // namespace monoidk
