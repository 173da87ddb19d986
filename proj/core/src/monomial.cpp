#include "monoidk/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace monoidk {

bool RowMonomicMatrix::operator<(const RowMonomicMatrix& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return entries < o.entries;
}

RowMonomicMatrix identity_matrix(const PointedMonoid& a, int n) {
    RowMonomicMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries[i] = {{i, a.one}};
    return m;
}

RowMonomicMatrix permutation_matrix(const PointedMonoid& a, const std::vector<int>& perm) {
    RowMonomicMatrix m(static_cast<int>(perm.size()), static_cast<int>(perm.size()));
    for (size_t i = 0; i < perm.size(); ++i) m.entries[i] = {{perm[i], a.one}};
    return m;
}

RowMonomicMatrix mat_mul(const PointedMonoid& a, const RowMonomicMatrix& l,
                         const RowMonomicMatrix& r) {
    if (l.cols != r.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    RowMonomicMatrix out(l.rows, r.cols);
    for (int i = 0; i < l.rows; ++i) {
        if (!l.entries[i]) continue;
        auto [j, x] = *l.entries[i];
        if (!r.entries[j]) continue;
        auto [k, y] = *r.entries[j];
        int p = a.mul(x, y);
        if (p != a.zero) out.entries[i] = {{k, p}};
    }
    return out;
}

DecomposeResult decompose(const PointedMonoid& a, const RowMonomicMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("decompose: matrix is not square");
    DecomposeResult res;
    std::vector<int> seen(m.cols, 0);
    UnitGroup u = units(a);
    std::vector<char> is_unit(a.size(), 0);
    for (int idx : u.monoid_index) is_unit[idx] = 1;

    MonomialDecomposition d;
    d.diag.resize(m.rows);
    d.perm.resize(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        if (!m.entries[i]) {
            res.verdict = InvertibleVerdict::MissingRow;
            res.witness_row = i;
            return res;
        }
        auto [j, x] = *m.entries[i];
        if (seen[j]++) {
            res.verdict = InvertibleVerdict::RepeatedColumn;
            res.witness_row = i;
            return res;
        }
        if (!is_unit[x]) {
            res.verdict = InvertibleVerdict::NonUnitEntry;
            res.witness_row = i;
            return res;
        }
        d.diag[i] = x;
        d.perm[i] = j;
    }
    res.decomposition = std::move(d);
    return res;
}

RowMonomicMatrix recompose(const PointedMonoid& a, const MonomialDecomposition& d) {
    RowMonomicMatrix m(static_cast<int>(d.diag.size()), static_cast<int>(d.diag.size()));
    for (size_t i = 0; i < d.diag.size(); ++i) {
        if (d.diag[i] == a.zero) throw std::invalid_argument("recompose: zero diagonal entry");
        m.entries[i] = {{d.perm[i], d.diag[i]}};
    }
    return m;
}

bool is_even_permutation(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int parity = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity == 0;
}

std::vector<RowMonomicMatrix> enumerate_gl(const PointedMonoid& a, int n,
                                           std::uint64_t size_guard) {
    if (n < 1) throw std::invalid_argument("enumerate_gl: n must be >= 1");
    UnitGroup u = units(a);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(u.group.size());
        total *= static_cast<std::uint64_t>(i + 1);
        if (total > size_guard)
            throw std::runtime_error("enumerate_gl: |A^x|^n * n! exceeds size guard");
    }

    std::vector<RowMonomicMatrix> out;
    out.reserve(total);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> diag(n, 0);  // indices into u.monoid_index
        for (;;) {
            MonomialDecomposition d;
            d.perm = perm;
            for (int i = 0; i < n; ++i) d.diag.push_back(u.monoid_index[diag[i]]);
            out.push_back(recompose(a, d));
            int pos = 0;
            while (pos < n && ++diag[pos] == u.group.size()) diag[pos++] = 0;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_elementary(const PointedMonoid& a, const RowMonomicMatrix& m) {
    DecomposeResult d = decompose(a, m);
    if (!d.invertible()) throw std::invalid_argument("in_elementary: matrix is not invertible");
    if (!is_even_permutation(d.decomposition->perm)) return false;
    int prod = a.one;
    for (int x : d.decomposition->diag) prod = a.mul(prod, x);
    UnitGroup u = units(a);
    std::vector<int> pos(a.size(), -1);
    for (size_t i = 0; i < u.monoid_index.size(); ++i)
        pos[u.monoid_index[i]] = static_cast<int>(i);
    std::vector<int> comm = commutator_subgroup_elements(u.group);
    return std::binary_search(comm.begin(), comm.end(), pos[prod]);
}

namespace {

// Generators of GL_n(A): D(u,1,...,1) per unit u, and adjacent transpositions.
std::vector<RowMonomicMatrix> gl_generators(const PointedMonoid& a, int n) {
    std::vector<RowMonomicMatrix> gens;
    UnitGroup u = units(a);
    for (int g : u.monoid_index) {
        if (g == a.one) continue;
        MonomialDecomposition d;
        d.diag.assign(n, a.one);
        d.diag[0] = g;
        d.perm.resize(n);
        std::iota(d.perm.begin(), d.perm.end(), 0);
        gens.push_back(recompose(a, d));
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(permutation_matrix(a, p));
    }
    return gens;
}

RowMonomicMatrix gl_inverse(const PointedMonoid& a, const RowMonomicMatrix& m) {
    DecomposeResult d = decompose(a, m);
    if (!d.invertible()) throw std::invalid_argument("gl_inverse: not invertible");
    UnitGroup u = units(a);
    std::vector<int> pos(a.size(), -1);
    for (size_t i = 0; i < u.monoid_index.size(); ++i)
        pos[u.monoid_index[i]] = static_cast<int>(i);
    int n = m.rows;
    MonomialDecomposition inv;
    inv.diag.resize(n);
    inv.perm.resize(n);
    for (int i = 0; i < n; ++i) {
        int j = d.decomposition->perm[i];
        inv.perm[j] = i;
        inv.diag[j] = u.monoid_index[u.group.inv(pos[d.decomposition->diag[i]])];
    }
    return recompose(a, inv);
}

}  // namespace

namespace {

// Packed arithmetic for invertible monomial matrices: perm + unit-index diag.
struct GlElem {
    std::vector<int> perm;
    std::vector<int> diag;  // indices into the unit group

    bool operator==(const GlElem&) const = default;
    bool operator<(const GlElem& o) const {
        return std::tie(perm, diag) < std::tie(o.perm, o.diag);
    }
};

struct GlArith {
    const FiniteGroup* u;
    int n;

    GlElem mul(const GlElem& x, const GlElem& y) const {
        GlElem z;
        z.perm.resize(n);
        z.diag.resize(n);
        for (int i = 0; i < n; ++i) {
            z.perm[i] = y.perm[x.perm[i]];
            z.diag[i] = u->mul(x.diag[i], y.diag[x.perm[i]]);
        }
        return z;
    }
    GlElem inv(const GlElem& x) const {
        GlElem z;
        z.perm.resize(n);
        z.diag.resize(n);
        for (int i = 0; i < n; ++i) {
            z.perm[x.perm[i]] = i;
            z.diag[x.perm[i]] = u->inv(x.diag[i]);
        }
        return z;
    }
    GlElem identity() const {
        GlElem z;
        z.perm.resize(n);
        z.diag.assign(n, u->identity);
        std::iota(z.perm.begin(), z.perm.end(), 0);
        return z;
    }
};

}  // namespace

std::vector<RowMonomicMatrix> brute_elementary(const PointedMonoid& a, int n,
                                               std::uint64_t size_guard) {
    UnitGroup ug = units(a);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(std::max(1, ug.group.size()));
        total *= static_cast<std::uint64_t>(i + 1);
        if (total > size_guard)
            throw std::runtime_error("brute_elementary: GL size exceeds size guard");
    }
    GlArith gl{&ug.group, n};

    std::vector<GlElem> gens;
    for (int g = 0; g < ug.group.size(); ++g) {
        if (g == ug.group.identity) continue;
        GlElem e = gl.identity();
        e.diag[0] = g;
        gens.push_back(e);
    }
    for (int i = 0; i + 1 < n; ++i) {
        GlElem e = gl.identity();
        std::swap(e.perm[i], e.perm[i + 1]);
        gens.push_back(e);
    }

    // [GL, GL] is the normal closure of the commutators of the generators:
    // close the seed under conjugation by generators, then take the subgroup
    // generated by the conjugation-closed set.
    std::set<GlElem> seed;
    std::vector<GlElem> work;
    auto add_seed = [&](const GlElem& x) {
        if (seed.insert(x).second) work.push_back(x);
    };
    for (const GlElem& g : gens)
        for (const GlElem& h : gens)
            add_seed(gl.mul(gl.mul(g, h), gl.inv(gl.mul(h, g))));
    while (!work.empty()) {
        GlElem x = work.back();
        work.pop_back();
        add_seed(gl.inv(x));
        for (const GlElem& g : gens) add_seed(gl.mul(gl.mul(g, x), gl.inv(g)));
    }

    std::set<GlElem> members;
    std::vector<GlElem> frontier;
    members.insert(gl.identity());
    frontier.push_back(gl.identity());
    while (!frontier.empty()) {
        GlElem x = frontier.back();
        frontier.pop_back();
        for (const GlElem& s : seed) {
            GlElem p = gl.mul(x, s);
            if (members.insert(p).second) frontier.push_back(p);
        }
    }

    std::vector<RowMonomicMatrix> out;
    out.reserve(members.size());
    for (const GlElem& e : members) {
        MonomialDecomposition d;
        d.perm = e.perm;
        for (int i = 0; i < n; ++i) d.diag.push_back(ug.monoid_index[e.diag[i]]);
        out.push_back(recompose(a, d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGroup gl_group(const PointedMonoid& a, int n, std::uint64_t size_guard) {
    std::vector<RowMonomicMatrix> elems = enumerate_gl(a, n, size_guard);
    std::map<RowMonomicMatrix, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int k = static_cast<int>(elems.size());
    FiniteGroup g;
    g.table.resize(static_cast<size_t>(k) * k);
    g.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
        g.labels.push_back(matrix_to_string(a, elems[i]));
        g.inverse[i] = index.at(gl_inverse(a, elems[i]));
        for (int j = 0; j < k; ++j)
            g.table[static_cast<size_t>(i) * k + j] = index.at(mat_mul(a, elems[i], elems[j]));
    }
    g.identity = index.at(identity_matrix(a, n));
    return g;
}

std::string matrix_to_string(const PointedMonoid& a, const RowMonomicMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows; ++i) {
        if (i) os << ";";
        if (m.entries[i])
            os << m.entries[i]->first << ":" << a.labels[m.entries[i]->second];
        else
            os << "-";
    }
    os << "]";
    return os.str();
}

}  // namespace monoidk
