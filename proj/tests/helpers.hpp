#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library code paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "monoidk/abgroup.hpp"
#include "monoidk/aset.hpp"
#include "monoidk/monoid.hpp"
#include "monoidk/monomial.hpp"

namespace testutil {

using namespace monoidk;

// {0, 1, e} with e idempotent and not a unit
inline PointedMonoid idempotent_monoid() {
    PointedMonoid m;
    m.labels = {"0", "1", "e"};
    m.zero = 0;
    m.one = 1;
    m.table = {0, 0, 0, 0, 1, 2, 0, 2, 2};
    return m;
}

inline std::vector<PointedMonoid> test_monoids() {
    return {f1(), group_monoid(cyclic_group(2)), group_monoid(cyclic_group(3)),
            group_monoid(symmetric_group(3)), idempotent_monoid()};
}

// --- dense monoid-ring matrices (oracle for row-monomic multiplication) ---

// entry (i, j) is a formal N-linear combination of nonzero monoid elements
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::map<int, int>> cells;  // element index -> coefficient

    DenseMatrix(int r, int c) : rows(r), cols(c), cells(static_cast<size_t>(r) * c) {}
    std::map<int, int>& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
};

inline DenseMatrix to_dense(const RowMonomicMatrix& m) {
    DenseMatrix d(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        if (m.entries[i]) d.at(i, m.entries[i]->first)[m.entries[i]->second] += 1;
    return d;
}

inline DenseMatrix dense_mul(const PointedMonoid& a, DenseMatrix l, DenseMatrix r) {
    DenseMatrix out(l.rows, r.cols);
    for (int i = 0; i < l.rows; ++i)
        for (int j = 0; j < l.cols; ++j)
            for (const auto& [x, cx] : l.at(i, j))
                for (int k = 0; k < r.cols; ++k)
                    for (const auto& [y, cy] : r.at(j, k)) {
                        int p = a.mul(x, y);
                        if (p != a.zero) out.at(i, k)[p] += cx * cy;
                    }
    return out;
}

inline bool dense_equals(DenseMatrix d, const RowMonomicMatrix& m) {
    DenseMatrix e = to_dense(m);
    return d.cells == e.cells;
}

// --- exhaustive minimal-congruence oracle for coequalizers ----------------

// all partitions of {0..n-1} via restricted growth strings
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(n, 0);
    for (;;) {
        out.push_back(rgs);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

// the finest A-compatible partition of tgt identifying f(m) with g(m)
inline std::vector<int> minimal_congruence_oracle(const ASetMorphism& f,
                                                  const ASetMorphism& g) {
    const FiniteASet& n = *f.tgt;
    const PointedMonoid& a = *n.monoid;
    std::vector<std::vector<int>> valid;
    for (const auto& p : all_partitions(n.size())) {
        bool ok = true;
        for (size_t m = 0; m < f.map.size() && ok; ++m)
            if (p[f.map[m]] != p[g.map[m]]) ok = false;
        for (int u = 0; u < a.size() && ok; ++u)
            for (int x = 0; x < n.size() && ok; ++x)
                for (int y = x + 1; y < n.size() && ok; ++y)
                    if (p[x] == p[y] && p[n.act(u, x)] != p[n.act(u, y)]) ok = false;
        if (ok) valid.push_back(p);
    }
    // intersection of all valid congruences, renumbered canonically
    std::vector<int> blocks(n.size());
    std::map<std::vector<int>, int> sig_index;
    for (int x = 0; x < n.size(); ++x) {
        std::vector<int> sig;
        for (const auto& p : valid) sig.push_back(p[x]);
        auto it = sig_index.find(sig);
        if (it == sig_index.end())
            it = sig_index.emplace(sig, static_cast<int>(sig_index.size())).first;
        blocks[x] = it->second;
    }
    return blocks;
}

inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> fwd, bwd;
    for (size_t i = 0; i < a.size(); ++i) {
        auto f = fwd.emplace(a[i], b[i]);
        if (!f.second && f.first->second != b[i]) return false;
        auto g = bwd.emplace(b[i], a[i]);
        if (!g.second && g.first->second != a[i]) return false;
    }
    return true;
}

// --- homology of free chain complexes via Smith normal form ---------------

// H_k = Z^(n_k - rank d_k - rank d_{k+1}) + torsion(invariant factors of d_{k+1})
inline FgAbelianGroup complex_homology(const std::vector<int>& dims,
                                       const std::vector<IntMatrix>& diffs, int k) {
    auto rank_and_factors = [](const IntMatrix& m) {
        SmithResult s = smith_normal_form(m);
        std::vector<Int> diag = s.diagonal();
        int rank = 0;
        std::vector<Int> factors;
        for (const Int& d : diag)
            if (d != 0) {
                ++rank;
                if (d > 1 || d < -1) factors.push_back(abs(d));
            }
        return std::make_pair(rank, factors);
    };
    int rk_dk = 0;
    if (k >= 1 && k < static_cast<int>(diffs.size()) + 1)
        rk_dk = rank_and_factors(diffs[k - 1]).first;
    int rk_next = 0;
    std::vector<Int> torsion;
    if (k < static_cast<int>(diffs.size())) {
        auto [r, t] = rank_and_factors(diffs[k]);
        rk_next = r;
        torsion = t;
    }
    int free_rank = dims[k] - rk_dk - rk_next;
    return FgAbelianGroup::from_summands(free_rank, torsion);
}

// periodic resolution complex of a cyclic factor (d = 0 means Z), degrees 0..top
struct FactorComplex {
    std::vector<int> dims;
    std::vector<Int> diff;  // scalar differential C_k -> C_{k-1} (1x1), diff[k-1]
};

inline FactorComplex factor_complex(const Int& d, int top) {
    FactorComplex c;
    if (d == 0) {
        // circle: Z in degrees 0 and 1, zero differential
        c.dims = {1, 1};
        c.diff = {0};
        for (int k = 2; k <= top; ++k) {
            c.dims.push_back(0);
            c.diff.push_back(0);
        }
    } else {
        for (int k = 0; k <= top; ++k) c.dims.push_back(1);
        for (int k = 1; k <= top; ++k) c.diff.push_back(k % 2 == 0 ? d : Int(0));
    }
    return c;
}

// total complex of the tensor product of the factor complexes
inline FgAbelianGroup resolution_homology_oracle(const FgAbelianGroup& g, int k) {
    int top = k + 1;
    std::vector<Int> orders;
    for (int i = 0; i < g.free_rank; ++i) orders.push_back(0);
    for (const Int& d : g.torsion) orders.push_back(d);
    if (orders.empty()) return k == 0 ? FgAbelianGroup::free_group(1) : FgAbelianGroup::trivial();

    // basis of total degree n: tuples of per-factor degrees with nonzero dims
    std::vector<FactorComplex> fcs;
    for (const Int& d : orders) fcs.push_back(factor_complex(d, top));
    int nf = static_cast<int>(fcs.size());
    std::vector<std::vector<std::vector<int>>> basis(top + 1);  // degree -> tuples
    std::vector<int> tuple(nf, 0);
    for (;;) {
        int total = std::accumulate(tuple.begin(), tuple.end(), 0);
        bool alive = true;
        for (int i = 0; i < nf; ++i)
            if (fcs[i].dims[tuple[i]] == 0) alive = false;
        if (alive && total <= top) basis[total].push_back(tuple);
        int i = nf - 1;
        for (; i >= 0; --i) {
            if (++tuple[i] <= top) break;
            tuple[i] = 0;
        }
        if (i < 0) break;
    }
    std::vector<int> dims(top + 1);
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int n = 0; n <= top; ++n) {
        dims[n] = static_cast<int>(basis[n].size());
        for (int b = 0; b < dims[n]; ++b) index[n][basis[n][b]] = b;
    }
    std::vector<IntMatrix> diffs;  // diffs[n-1]: C_n -> C_{n-1}
    for (int n = 1; n <= top; ++n) {
        IntMatrix m(dims[n - 1], dims[n]);
        for (int b = 0; b < dims[n]; ++b) {
            const std::vector<int>& t = basis[n][b];
            int sign = 1;
            for (int i = 0; i < nf; ++i) {
                if (t[i] > 0) {
                    Int dval = fcs[i].diff[t[i] - 1];
                    if (dval != 0) {
                        std::vector<int> s = t;
                        --s[i];
                        auto it = index[n - 1].find(s);
                        if (it != index[n - 1].end()) m.at(it->second, b) += sign * dval;
                    }
                }
                sign *= (t[i] % 2 == 0) ? 1 : -1;  // Koszul sign by degrees to the left
            }
        }
        diffs.push_back(std::move(m));
    }
    return complex_homology(dims, diffs, k);
}

// exterior-square formula for H_2 of Z^r + sum Z/d_i
inline FgAbelianGroup exterior_square_oracle(const FgAbelianGroup& g) {
    int r = g.free_rank;
    std::vector<Int> orders;
    FgAbelianGroup out = FgAbelianGroup::free_group(r * (r - 1) / 2);
    std::vector<Int> torsion;
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        for (int copy = 0; copy < r; ++copy) torsion.push_back(g.torsion[i]);
        for (size_t j = i + 1; j < g.torsion.size(); ++j)
            torsion.push_back(gcd(g.torsion[i], g.torsion[j]));
    }
    return direct_sum(out, FgAbelianGroup::from_summands(0, torsion));
}

// abelianization via the relation matrix of the multiplication table
inline FgAbelianGroup abelianization_snf_oracle(const FiniteGroup& g) {
    int n = g.size();
    IntMatrix rel(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = i * n + j;
            rel.at(i, c) += 1;
            rel.at(j, c) += 1;
            rel.at(g.mul(i, j), c) -= 1;
        }
    FgAbelianGroup q = cokernel(rel);
    return q;
}

inline FgAbelianGroup random_group(std::mt19937_64& rng, int max_summands = 4) {
    std::uniform_int_distribution<int> count(1, max_summands);
    std::uniform_int_distribution<int> kind(0, 5);
    int free_rank = 0;
    std::vector<Int> torsion;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        int c = kind(rng);
        if (c == 0)
            ++free_rank;
        else
            torsion.push_back(2 + kind(rng) * 2 + (c % 2));  // orders in 2..13
    }
    return FgAbelianGroup::from_summands(free_rank, torsion);
}

// random A-set: a quotient of a small free A-set by a random congruence
inline ASetPtr random_aset(std::mt19937_64& rng, const MonoidPtr& a, int generators = 2) {
    std::vector<std::string> gens;
    for (int i = 1; i <= generators; ++i) gens.push_back("y" + std::to_string(i));
    ASetPtr f = free_aset(a, gens).aset;
    ASetPtr probe = free_aset(a, {"p"}).aset;
    std::vector<ASetMorphism> maps = hom_set(probe, f);
    std::uniform_int_distribution<size_t> pick(0, maps.size() - 1);
    CoequalizerResult c = coequalizer(maps[pick(rng)], maps[pick(rng)]);
    return c.quotient;
}

}  // namespace testutil
