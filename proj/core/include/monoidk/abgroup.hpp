#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoidk {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, exact arithmetic.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// U * M * V = S with S diagonal, d1 | d2 | ..., U and V unimodular.
struct SmithResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;

    std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group in invariant-factor canonical form:
/// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each di >= 2.
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup free_group(int rank) { return {rank, {}}; }
    static FgAbelianGroup cyclic(const Int& d);
    /// Normalizes an arbitrary list of cyclic orders into canonical form.
    static FgAbelianGroup from_summands(int free_rank, const std::vector<Int>& orders);

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // 0 when infinite
    std::string to_string() const;

    bool operator==(const FgAbelianGroup& o) const = default;
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Cokernel of m seen as a map Z^cols -> Z^rows (columns are relations
/// among `rows` generators).
FgAbelianGroup cokernel(const IntMatrix& m);

/// (G tensor H, Tor(G, H)).
std::pair<FgAbelianGroup, FgAbelianGroup> tensor_tor(const FgAbelianGroup& g,
                                                     const FgAbelianGroup& h);

enum class Coefficients { Z, Z2 };

/// H_k(G; Z) or H_k(G; Z/2) for k <= 3, computed by iterated Kunneth over the
/// cyclic decomposition; Z/2 coefficients via universal coefficients.
FgAbelianGroup homology(const FgAbelianGroup& g, int k, Coefficients coeff = Coefficients::Z);

bool iso_test(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Parses "free=r;torsion=d1,d2,..." (either part optional) and normalizes.
FgAbelianGroup parse_group_spec(const std::string& spec);
std::string group_spec(const FgAbelianGroup& g);

}  // namespace monoidk
