#include "monoidk/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monoidk {

bool PointedMonoid::is_commutative() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> PointedMonoid::idempotents() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a)
        if (is_idempotent(a)) out.push_back(a);
    return out;
}

int FiniteGroup::order_of(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<ValidationIssue> validate_monoid(const PointedMonoid& m) {
    std::vector<ValidationIssue> issues;
    int n = m.size();
    if (n == 0) {
        issues.push_back({"structure", "empty element list"});
        return issues;
    }
    if (m.table.size() != static_cast<size_t>(n) * n) {
        std::ostringstream os;
        os << "table has " << m.table.size() << " entries, expected " << n * n;
        issues.push_back({"structure", os.str()});
        return issues;
    }
    for (size_t k = 0; k < m.table.size(); ++k)
        if (m.table[k] < 0 || m.table[k] >= n) {
            issues.push_back({"structure", "table entry out of range"});
            return issues;
        }
    if (m.zero < 0 || m.zero >= n) issues.push_back({"structure", "zero index out of range"});
    if (m.one < 0 || m.one >= n) issues.push_back({"structure", "one index out of range"});
    if (!issues.empty()) return issues;
    if (m.zero == m.one && n > 1)
        issues.push_back({"structure", "zero equals one in a monoid with more than one element"});

    for (int a = 0; a < n; ++a) {
        if (m.mul(m.zero, a) != m.zero || m.mul(a, m.zero) != m.zero) {
            issues.push_back({"absorbing", "0 * " + m.labels[a] + " or " + m.labels[a] +
                                               " * 0 is not 0"});
        }
        if (m.mul(m.one, a) != a || m.mul(a, m.one) != a)
            issues.push_back({"unit", "1 is not an identity at " + m.labels[a]});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
                    issues.push_back({"associativity", "(" + m.labels[a] + " " + m.labels[b] +
                                                           ") " + m.labels[c] + " != " +
                                                           m.labels[a] + " (" + m.labels[b] + " " +
                                                           m.labels[c] + ")"});
                }
    return issues;
}

std::vector<ValidationIssue> validate_group(const FiniteGroup& g) {
    std::vector<ValidationIssue> issues;
    int n = g.size();
    if (n == 0 || g.table.size() != static_cast<size_t>(n) * n ||
        g.inverse.size() != static_cast<size_t>(n)) {
        issues.push_back({"structure", "malformed group data"});
        return issues;
    }
    for (int a = 0; a < n; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
            issues.push_back({"unit", "identity fails at " + g.labels[a]});
        if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity)
            issues.push_back({"inverse", "inverse fails at " + g.labels[a]});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    issues.push_back({"associativity", "associativity fails"});
    return issues;
}

PointedMonoid group_monoid(const FiniteGroup& g) {
    PointedMonoid m;
    int n = g.size();
    m.labels.reserve(n + 1);
    m.labels.push_back("*");
    for (const auto& l : g.labels) m.labels.push_back(l == "*" ? l + "'" : l);
    m.zero = 0;
    m.one = g.identity + 1;
    m.table.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m.table[static_cast<size_t>(a + 1) * (n + 1) + (b + 1)] = g.mul(a, b) + 1;
    return m;
}

UnitGroup units(const PointedMonoid& m) {
    int n = m.size();
    std::vector<int> unit_idx;
    std::vector<int> inv_of(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m.mul(a, b) == m.one && m.mul(b, a) == m.one) {
                unit_idx.push_back(a);
                inv_of[a] = b;
                break;
            }
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < unit_idx.size(); ++i) pos[unit_idx[i]] = static_cast<int>(i);

    UnitGroup ug;
    ug.monoid_index = unit_idx;
    int k = static_cast<int>(unit_idx.size());
    ug.group.labels.reserve(k);
    for (int a : unit_idx) ug.group.labels.push_back(m.labels[a]);
    ug.group.table.resize(static_cast<size_t>(k) * k);
    ug.group.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
        ug.group.inverse[i] = pos[inv_of[unit_idx[i]]];
        for (int j = 0; j < k; ++j)
            ug.group.table[static_cast<size_t>(i) * k + j] = pos[m.mul(unit_idx[i], unit_idx[j])];
    }
    ug.group.identity = pos[m.one];
    return ug;
}

std::vector<int> commutator_subgroup_elements(const FiniteGroup& g) {
    std::set<int> members;
    std::vector<int> work;
    auto add = [&](int x) {
        if (members.insert(x).second) work.push_back(x);
    };
    add(g.identity);
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            add(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    // close under multiplication; commutator sets are inverse- and
    // conjugation-closed already, products complete the subgroup
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int y : std::vector<int>(members.begin(), members.end())) {
            add(g.mul(x, y));
            add(g.mul(y, x));
        }
    }
    return {members.begin(), members.end()};
}

namespace {

FiniteGroup subgroup_from_elements(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    FiniteGroup h;
    int k = static_cast<int>(elems.size());
    for (int e : elems) h.labels.push_back(g.labels[e]);
    h.table.resize(static_cast<size_t>(k) * k);
    h.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
        h.inverse[i] = pos[g.inv(elems[i])];
        for (int j = 0; j < k; ++j) {
            int p = g.mul(elems[i], elems[j]);
            if (pos[p] < 0) throw std::logic_error("subgroup_from_elements: not closed");
            h.table[static_cast<size_t>(i) * k + j] = pos[p];
        }
    }
    h.identity = pos[g.identity];
    return h;
}

}  // namespace

FiniteGroup commutator_subgroup(const FiniteGroup& g) {
    return subgroup_from_elements(g, commutator_subgroup_elements(g));
}

FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal) {
    std::set<int> nset(normal.begin(), normal.end());
    std::vector<int> coset_of(g.size(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.size(); ++a) {
        if (coset_of[a] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int n : nset) coset_of[g.mul(a, n)] = c;
        if (coset_of[a] != c) throw std::invalid_argument("quotient_group: subgroup not closed");
    }
    int k = static_cast<int>(reps.size());
    FiniteGroup q;
    for (int r : reps) q.labels.push_back("[" + g.labels[r] + "]");
    q.table.resize(static_cast<size_t>(k) * k);
    q.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
        q.inverse[i] = coset_of[g.inv(reps[i])];
        for (int j = 0; j < k; ++j)
            q.table[static_cast<size_t>(i) * k + j] = coset_of[g.mul(reps[i], reps[j])];
    }
    q.identity = coset_of[g.identity];
    return q;
}

FgAbelianGroup abelian_invariants(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
    long long order = g.size();
    // primary decomposition per prime from the counts of p^k-torsion elements
    std::map<long long, std::vector<int>> primary;  // prime -> partition (exponents, descending)
    long long rest = order;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        primary[p] = {};
    }
    if (rest > 1) primary[rest] = {};

    for (auto& [p, partition] : primary) {
        // m_k = log_p #{x : x^(p^k) = 1}; parts >= k appear m_k - m_{k-1} times
        std::vector<int> logs{0};
        for (int k = 1;; ++k) {
            long long pk = 1;
            for (int t = 0; t < k; ++t) pk *= p;
            int count = 0;
            for (int x = 0; x < g.size(); ++x) {
                int y = g.identity;
                long long e = pk % g.order_of(x);
                for (long long t = 0; t < e; ++t) y = g.mul(y, x);
                if (y == g.identity) ++count;
            }
            int lg = 0;
            long long c = count;
            while (c > 1) {
                c /= p;
                ++lg;
            }
            logs.push_back(lg);
            if (lg == logs[k - 1]) break;  // saturated
        }
        for (size_t k = 1; k < logs.size(); ++k) {
            int parts_ge_k = logs[k] - logs[k - 1];
            for (int t = 0; t < parts_ge_k; ++t) {
                if (partition.size() <= static_cast<size_t>(t)) partition.push_back(0);
                partition[t] = static_cast<int>(k);
            }
        }
        std::sort(partition.rbegin(), partition.rend());
    }

    size_t max_parts = 0;
    for (auto& [p, partition] : primary) max_parts = std::max(max_parts, partition.size());
    std::vector<Int> factors;
    for (size_t i = 0; i < max_parts; ++i) {
        Int f = 1;
        for (auto& [p, partition] : primary)
            if (i < partition.size())
                for (int t = 0; t < partition[i]; ++t) f *= p;
        factors.push_back(f);
    }
    return FgAbelianGroup::from_summands(0, factors);
}

FgAbelianGroup abelianization(const FiniteGroup& g) {
    return abelian_invariants(quotient_group(g, commutator_subgroup_elements(g)));
}

PolyElement poly_mul(const PointedMonoid& a, const PolyElement& x, const PolyElement& y) {
    if (x.zero || y.zero) return {};
    int c = a.mul(x.coeff, y.coeff);
    if (c == a.zero) return {};
    return {false, c, x.degree + y.degree};
}

PolyUnitsReport poly_units(const PointedMonoid& a) {
    PolyUnitsReport rep;
    UnitGroup u = units(a);
    rep.units_of_ax = u.group;
    for (auto& l : rep.units_of_ax.labels) l += "x^0";
    for (int i = 0; i < u.group.size(); ++i)
        rep.bijection.emplace_back(u.monoid_index[i], PolyElement{false, u.monoid_index[i], 0});
    // (e, n) idempotent iff e^2 = e and 2n = n, which forces n = 0
    for (int e : a.idempotents())
        if (e != a.zero) rep.idempotents.emplace_back(e, PolyElement{false, e, 0});
    return rep;
}

PointedMonoid f1() {
    PointedMonoid m;
    m.labels = {"0", "1"};
    m.zero = 0;
    m.one = 1;
    m.table = {0, 0, 0, 1};
    return m;
}

FiniteGroup trivial_group() {
    FiniteGroup g;
    g.labels = {"1"};
    g.table = {0};
    g.identity = 0;
    g.inverse = {0};
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    FiniteGroup g;
    for (int i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
    g.table.resize(static_cast<size_t>(n) * n);
    g.inverse.resize(n);
    for (int i = 0; i < n; ++i) {
        g.inverse[i] = (n - i) % n;
        for (int j = 0; j < n; ++j) g.table[static_cast<size_t>(i) * n + j] = (i + j) % n;
    }
    g.identity = 0;
    return g;
}

FiniteGroup symmetric_group(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    int k = static_cast<int>(perms.size());
    FiniteGroup g;
    g.table.resize(static_cast<size_t>(k) * k);
    g.inverse.resize(k);
    for (int i = 0; i < k; ++i) {
        std::ostringstream os;
        os << "(";
        for (int v : perms[i]) os << v + 1;
        os << ")";
        g.labels.push_back(os.str());
        std::vector<int> inv(n);
        for (int x = 0; x < n; ++x) inv[perms[i][x]] = x;
        g.inverse[i] = index[inv];
        for (int j = 0; j < k; ++j) {
            std::vector<int> prod(n);
            for (int x = 0; x < n; ++x) prod[x] = perms[i][perms[j][x]];
            g.table[static_cast<size_t>(i) * k + j] = index[prod];
        }
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    g.identity = index[id];
    return g;
}

FiniteGroup quaternion_group() {
    // {1, -1, i, -i, j, -j, k, -k}
    const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto mul = [](int a, int b) {
        // encode: sign = a & 1, axis = a >> 1 (0 = scalar, 1 = i, 2 = j, 3 = k)
        int sa = a & 1, xa = a >> 1, sb = b & 1, xb = b >> 1;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int x = axis[xa][xb];
        int s = sa ^ sb ^ sign[xa][xb];
        return (x << 1) | s;
    };
    FiniteGroup g;
    g.labels.assign(names, names + 8);
    g.table.resize(64);
    g.inverse.resize(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            g.table[static_cast<size_t>(a) * 8 + b] = mul(a, b);
            if (mul(a, b) == 0) g.inverse[a] = b;
        }
    g.identity = 0;
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.size(), m = b.size();
    FiniteGroup g;
    g.table.resize(static_cast<size_t>(n) * m * n * m);
    g.inverse.resize(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) g.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    auto idx = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            g.inverse[idx(i, j)] = idx(a.inv(i), b.inv(j));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < m; ++l)
                    g.table[static_cast<size_t>(idx(i, j)) * n * m + idx(k, l)] =
                        idx(a.mul(i, k), b.mul(j, l));
        }
    g.identity = idx(a.identity, b.identity);
    return g;
}

FiniteGroup abelian_group_table(const FgAbelianGroup& g) {
    if (!g.is_finite()) throw std::invalid_argument("abelian_group_table: group is infinite");
    FiniteGroup out = trivial_group();
    for (const Int& d : g.torsion) out = direct_product(out, cyclic_group(static_cast<int>(d)));
    return out;
}

}  // namespace monoidk
