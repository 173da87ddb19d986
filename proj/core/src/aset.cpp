#include "monoidk/aset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monoidk {

MonoidPtr f1_ptr() {
    static MonoidPtr instance = std::make_shared<const PointedMonoid>(f1());
    return instance;
}

std::vector<ValidationIssue> validate_aset(const FiniteASet& m) {
    std::vector<ValidationIssue> issues;
    if (!m.monoid) {
        issues.push_back({"structure", "missing monoid"});
        return issues;
    }
    const PointedMonoid& a = *m.monoid;
    int n = m.size();
    if (n == 0 || m.action.size() != static_cast<size_t>(a.size()) * n) {
        issues.push_back({"structure", "action table has wrong shape"});
        return issues;
    }
    for (int v : m.action)
        if (v < 0 || v >= n) {
            issues.push_back({"structure", "action entry out of range"});
            return issues;
        }
    for (int x = 0; x < n; ++x) {
        if (m.act(a.one, x) != x) issues.push_back({"unit", "1 does not fix " + m.carrier[x]});
        if (m.act(a.zero, x) != 0)
            issues.push_back({"zero", "0 does not send " + m.carrier[x] + " to the basepoint"});
    }
    for (int u = 0; u < a.size(); ++u)
        if (m.act(u, 0) != 0)
            issues.push_back({"basepoint", a.labels[u] + " does not fix the basepoint"});
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < a.size(); ++v)
            for (int x = 0; x < n; ++x)
                if (m.act(a.mul(u, v), x) != m.act(u, m.act(v, x))) {
                    issues.push_back({"action", "(ab).m != a.(b.m) at a=" + a.labels[u] +
                                                    " b=" + a.labels[v] + " m=" + m.carrier[x]});
                    return issues;
                }
    return issues;
}

bool is_morphism(const ASetMorphism& f) {
    if (!f.src || !f.tgt || f.src->monoid != f.tgt->monoid) return false;
    if (f.map.size() != static_cast<size_t>(f.src->size())) return false;
    if (f.map[0] != 0) return false;
    const PointedMonoid& a = *f.src->monoid;
    for (int u = 0; u < a.size(); ++u)
        for (int x = 0; x < f.src->size(); ++x)
            if (f.map[f.src->act(u, x)] != f.tgt->act(u, f.map[x])) return false;
    return true;
}

bool is_injective(const ASetMorphism& f) {
    std::set<int> img(f.map.begin(), f.map.end());
    return img.size() == f.map.size();
}

bool is_surjective(const ASetMorphism& f) {
    std::set<int> img(f.map.begin(), f.map.end());
    return static_cast<int>(img.size()) == f.tgt->size();
}

bool is_normal_morphism(const ASetMorphism& f) {
    std::set<int> off_kernel_images;
    for (size_t m = 0; m < f.map.size(); ++m) {
        if (f.map[m] == 0) continue;
        if (!off_kernel_images.insert(f.map[m]).second) return false;
    }
    return true;
}

ASetMorphism identity_morphism(const ASetPtr& m) {
    ASetMorphism f{m, m, std::vector<int>(m->size())};
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

ASetMorphism compose(const ASetMorphism& f, const ASetMorphism& g) {
    if (f.tgt != g.src) throw std::invalid_argument("compose: morphisms are not composable");
    ASetMorphism h{f.src, g.tgt, {}};
    h.map.reserve(f.map.size());
    for (int v : f.map) h.map.push_back(g.map[v]);
    return h;
}

FreeASet free_aset(const MonoidPtr& a, const std::vector<std::string>& generators) {
    std::set<std::string> distinct(generators.begin(), generators.end());
    if (distinct.size() != generators.size())
        throw std::invalid_argument("free_aset: generator labels must be distinct");
    FiniteASet m;
    m.monoid = a;
    int na = a->size();
    m.carrier.push_back("*");
    // element (u, g) = u.g for u != 0
    std::vector<std::vector<int>> index(generators.size(), std::vector<int>(na, 0));
    FreeASet out;
    for (size_t g = 0; g < generators.size(); ++g)
        for (int u = 0; u < na; ++u) {
            if (u == a->zero) continue;
            index[g][u] = static_cast<int>(m.carrier.size());
            m.carrier.push_back(u == a->one ? generators[g]
                                            : a->labels[u] + "." + generators[g]);
        }
    m.action.assign(static_cast<size_t>(na) * m.carrier.size(), 0);
    for (size_t g = 0; g < generators.size(); ++g)
        for (int u = 0; u < na; ++u) {
            if (u == a->zero) continue;
            for (int v = 0; v < na; ++v) {
                int p = a->mul(v, u);
                m.action[static_cast<size_t>(v) * m.carrier.size() + index[g][u]] =
                    p == a->zero ? 0 : index[g][p];
            }
        }
    out.aset = std::make_shared<const FiniteASet>(std::move(m));
    for (size_t g = 0; g < generators.size(); ++g) out.generator_index.push_back(index[g][a->one]);
    return out;
}

namespace {

ASetPtr sub_aset(const ASetPtr& m, const std::vector<int>& elements, std::vector<int>& pos) {
    // elements must contain 0 and be action-closed
    pos.assign(m->size(), -1);
    for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    FiniteASet s;
    s.monoid = m->monoid;
    for (int e : elements) s.carrier.push_back(m->carrier[e]);
    int na = m->monoid->size();
    s.action.resize(static_cast<size_t>(na) * elements.size());
    for (int u = 0; u < na; ++u)
        for (size_t i = 0; i < elements.size(); ++i) {
            int img = m->act(u, elements[i]);
            if (pos[img] < 0) throw std::logic_error("sub_aset: not action-closed");
            s.action[static_cast<size_t>(u) * elements.size() + i] = pos[img];
        }
    return std::make_shared<const FiniteASet>(std::move(s));
}

}  // namespace

KernelCokernel kernel_cokernel(const ASetMorphism& f) {
    KernelCokernel out;
    std::vector<int> ker_elems;
    for (int x = 0; x < f.src->size(); ++x)
        if (f.map[x] == 0) ker_elems.push_back(x);
    std::vector<int> kpos;
    out.kernel = sub_aset(f.src, ker_elems, kpos);
    out.kernel_inclusion = {out.kernel, f.src, ker_elems};

    std::vector<char> in_image(f.tgt->size(), 0);
    for (int v : f.map) in_image[v] = 1;
    FiniteASet cok;
    cok.monoid = f.tgt->monoid;
    std::vector<int> cpos(f.tgt->size(), 0);  // image collapses to basepoint
    cok.carrier.push_back("*");
    for (int y = 0; y < f.tgt->size(); ++y)
        if (!in_image[y]) {
            cpos[y] = static_cast<int>(cok.carrier.size());
            cok.carrier.push_back(f.tgt->carrier[y]);
        }
    int na = f.tgt->monoid->size();
    cok.action.resize(static_cast<size_t>(na) * cok.carrier.size());
    for (int u = 0; u < na; ++u) {
        for (int y = 0; y < f.tgt->size(); ++y) {
            if (in_image[y] && y != 0) continue;
            cok.action[static_cast<size_t>(u) * cok.carrier.size() + cpos[y]] =
                cpos[f.tgt->act(u, y)];
        }
        cok.action[static_cast<size_t>(u) * cok.carrier.size()] = 0;
    }
    out.cokernel = std::make_shared<const FiniteASet>(std::move(cok));
    out.projection = {f.tgt, out.cokernel, cpos};
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y);  // keep smallest index as representative
        parent[y] = x;
        return true;
    }
};

Congruence blocks_from(UnionFind& uf, int n) {
    Congruence c;
    c.block_of.assign(n, -1);
    std::map<int, int> block_index;
    block_index[uf.find(0)] = 0;  // basepoint block first
    c.block_count = 1;
    for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        auto it = block_index.find(r);
        if (it == block_index.end()) it = block_index.emplace(r, c.block_count++).first;
        c.block_of[x] = it->second;
    }
    return c;
}

ASetPtr quotient_by(const ASetPtr& n, const Congruence& c, ASetMorphism& proj) {
    FiniteASet q;
    q.monoid = n->monoid;
    q.carrier.resize(c.block_count);
    std::vector<int> rep(c.block_count, -1);
    for (int x = 0; x < n->size(); ++x)
        if (rep[c.block_of[x]] < 0) rep[c.block_of[x]] = x;
    for (int b = 0; b < c.block_count; ++b)
        q.carrier[b] = b == 0 ? "*" : "[" + n->carrier[rep[b]] + "]";
    int na = n->monoid->size();
    q.action.resize(static_cast<size_t>(na) * c.block_count);
    for (int u = 0; u < na; ++u)
        for (int b = 0; b < c.block_count; ++b)
            q.action[static_cast<size_t>(u) * c.block_count + b] = c.block_of[n->act(u, rep[b])];
    ASetPtr qp = std::make_shared<const FiniteASet>(std::move(q));
    proj = {n, qp, c.block_of};
    return qp;
}

}  // namespace

CoequalizerResult coequalizer(const ASetMorphism& f, const ASetMorphism& g) {
    if (f.src != g.src || f.tgt != g.tgt)
        throw std::invalid_argument("coequalizer: parallel pair required");
    const ASetPtr& n = f.tgt;
    UnionFind uf(n->size());
    for (int m = 0; m < f.src->size(); ++m) uf.unite(f.map[m], g.map[m]);
    // saturate under the action until the partition is a congruence
    int na = n->monoid->size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n->size(); ++x)
            for (int y = x + 1; y < n->size(); ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                for (int u = 0; u < na; ++u)
                    if (uf.unite(n->act(u, x), n->act(u, y))) changed = true;
            }
    }
    CoequalizerResult out;
    out.congruence = blocks_from(uf, n->size());
    out.quotient = quotient_by(n, out.congruence, out.projection);
    return out;
}

ProductCoproduct product_coproduct(const std::vector<ASetPtr>& ms) {
    if (ms.empty()) throw std::invalid_argument("product_coproduct: empty list");
    MonoidPtr a = ms[0]->monoid;
    for (const auto& m : ms)
        if (m->monoid != a) throw std::invalid_argument("product_coproduct: mixed monoids");
    int na = a->size();
    ProductCoproduct out;

    // product: full cartesian product, diagonal action
    size_t total = 1;
    for (const auto& m : ms) total *= m->size();
    FiniteASet prod;
    prod.monoid = a;
    std::vector<int> tuple(ms.size(), 0);
    std::vector<std::vector<int>> tuples;
    for (size_t t = 0; t < total; ++t) {
        tuples.push_back(tuple);
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < ms.size(); ++i) os << (i ? "," : "") << ms[i]->carrier[tuple[i]];
        os << ")";
        prod.carrier.push_back(os.str());
        for (size_t i = ms.size(); i-- > 0;) {
            if (++tuple[i] < ms[i]->size()) break;
            tuple[i] = 0;
        }
    }
    auto tuple_index = [&](const std::vector<int>& t) {
        size_t idx = 0;
        for (size_t i = 0; i < ms.size(); ++i) idx = idx * ms[i]->size() + t[i];
        return static_cast<int>(idx);
    };
    prod.action.resize(static_cast<size_t>(na) * total);
    for (int u = 0; u < na; ++u)
        for (size_t t = 0; t < total; ++t) {
            std::vector<int> img(ms.size());
            for (size_t i = 0; i < ms.size(); ++i) img[i] = ms[i]->act(u, tuples[t][i]);
            prod.action[static_cast<size_t>(u) * total + t] = tuple_index(img);
        }
    out.product = std::make_shared<const FiniteASet>(std::move(prod));
    for (size_t i = 0; i < ms.size(); ++i) {
        ASetMorphism pi{out.product, ms[i], {}};
        for (size_t t = 0; t < total; ++t) pi.map.push_back(tuples[t][i]);
        out.projections.push_back(std::move(pi));
    }

    // coproduct: wedge
    FiniteASet cop;
    cop.monoid = a;
    cop.carrier.push_back("*");
    std::vector<std::vector<int>> embed(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) {
        embed[i].assign(ms[i]->size(), 0);
        for (int x = 1; x < ms[i]->size(); ++x) {
            embed[i][x] = static_cast<int>(cop.carrier.size());
            cop.carrier.push_back(ms.size() == 1 ? ms[i]->carrier[x]
                                                 : ms[i]->carrier[x] + "#" + std::to_string(i));
        }
    }
    cop.action.resize(static_cast<size_t>(na) * cop.carrier.size());
    for (int u = 0; u < na; ++u) {
        cop.action[static_cast<size_t>(u) * cop.carrier.size()] = 0;
        for (size_t i = 0; i < ms.size(); ++i)
            for (int x = 1; x < ms[i]->size(); ++x)
                cop.action[static_cast<size_t>(u) * cop.carrier.size() + embed[i][x]] =
                    embed[i][ms[i]->act(u, x)];
    }
    out.coproduct = std::make_shared<const FiniteASet>(std::move(cop));
    for (size_t i = 0; i < ms.size(); ++i)
        out.injections.push_back({ms[i], out.coproduct, embed[i]});
    return out;
}

std::vector<int> minimal_generators(const FiniteASet& m) {
    std::vector<char> covered(m.size(), 0);
    covered[0] = 1;
    std::vector<int> gens;
    int na = m.monoid->size();
    for (int x = 1; x < m.size(); ++x) {
        if (covered[x]) continue;
        gens.push_back(x);
        for (int u = 0; u < na; ++u) covered[m.act(u, x)] = 1;
    }
    return gens;
}

std::vector<ASetMorphism> hom_set(const ASetPtr& m, const ASetPtr& n) {
    if (m->monoid != n->monoid) throw std::invalid_argument("hom_set: different monoids");
    std::vector<int> gens = minimal_generators(*m);
    int na = m->monoid->size();
    // witness (u, g) with u.gens[g] = x for every carrier element
    std::vector<std::pair<int, int>> witness(m->size(), {-1, -1});
    witness[0] = {m->monoid->zero, 0};
    for (size_t g = 0; g < gens.size(); ++g)
        for (int u = 0; u < na; ++u) {
            int x = m->act(u, gens[g]);
            if (witness[x].first < 0) witness[x] = {u, static_cast<int>(g)};
        }
    for (auto& w : witness)
        if (w.first < 0) throw std::logic_error("hom_set: generators do not generate");

    std::vector<ASetMorphism> out;
    if (gens.empty()) {
        out.push_back({m, n, std::vector<int>(m->size(), 0)});
        return out;
    }
    std::vector<int> assign(gens.size(), 0);
    for (;;) {
        ASetMorphism f{m, n, std::vector<int>(m->size())};
        for (int x = 0; x < m->size(); ++x)
            f.map[x] = n->act(witness[x].first, assign[witness[x].second]);
        f.map[0] = 0;
        if (is_morphism(f)) out.push_back(std::move(f));
        size_t pos = 0;
        while (pos < assign.size() && ++assign[pos] == n->size()) assign[pos++] = 0;
        if (pos == assign.size()) break;
    }
    return out;
}

std::vector<ASetMorphism> aset_isomorphisms(const ASetPtr& m, const ASetPtr& n) {
    std::vector<ASetMorphism> out;
    if (m->size() != n->size()) return out;
    for (ASetMorphism& f : hom_set(m, n))
        if (is_injective(f)) out.push_back(std::move(f));
    return out;
}

// --- Bisets ----------------------------------------------------------------

std::vector<ValidationIssue> validate_biset(const BiSet& m) {
    std::vector<ValidationIssue> issues;
    int n = m.size();
    const PointedMonoid& a = *m.left;
    const PointedMonoid& b = *m.right;
    if (m.left_action.size() != static_cast<size_t>(a.size()) * n ||
        m.right_action.size() != static_cast<size_t>(b.size()) * n) {
        issues.push_back({"structure", "action table has wrong shape"});
        return issues;
    }
    for (int x = 0; x < n; ++x) {
        if (m.lact(a.one, x) != x || m.ract(x, b.one) != x)
            issues.push_back({"unit", "unit action fails"});
        if (m.lact(a.zero, x) != 0 || m.ract(x, b.zero) != 0)
            issues.push_back({"zero", "zero action fails"});
    }
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < a.size(); ++v)
            for (int x = 0; x < n; ++x)
                if (m.lact(a.mul(u, v), x) != m.lact(u, m.lact(v, x)))
                    issues.push_back({"action", "left action is not associative"});
    for (int u = 0; u < b.size(); ++u)
        for (int v = 0; v < b.size(); ++v)
            for (int x = 0; x < n; ++x)
                if (m.ract(x, b.mul(u, v)) != m.ract(m.ract(x, u), v))
                    issues.push_back({"action", "right action is not associative"});
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < b.size(); ++v)
            for (int x = 0; x < n; ++x)
                if (m.ract(m.lact(u, x), v) != m.lact(u, m.ract(x, v)))
                    issues.push_back({"biset", "(am)b != a(mb)"});
    return issues;
}

BiSet as_biset(const ASetPtr& m) {
    BiSet b;
    b.left = m->monoid;
    b.right = f1_ptr();
    b.carrier = m->carrier;
    b.left_action = m->action;
    b.right_action.resize(2 * m->carrier.size());
    for (int x = 0; x < m->size(); ++x) {
        b.right_action[x] = 0;                      // .0
        b.right_action[m->carrier.size() + x] = x;  // .1
    }
    return b;
}

BiSet commutative_biset(const ASetPtr& m) {
    if (!m->monoid->is_commutative())
        throw std::invalid_argument("commutative_biset: monoid is not commutative");
    BiSet b = as_biset(m);
    b.right = m->monoid;
    b.right_action = m->action;
    return b;
}

BiSet regular_biset(const MonoidPtr& a) {
    BiSet b;
    b.left = a;
    b.right = a;
    b.carrier = a->labels;
    // re-index so that the absorbing element sits at carrier position 0
    std::vector<int> pos(a->size());
    pos[a->zero] = 0;
    int next = 1;
    for (int x = 0; x < a->size(); ++x)
        if (x != a->zero) pos[x] = next++;
    std::vector<std::string> carrier(a->size());
    for (int x = 0; x < a->size(); ++x) carrier[pos[x]] = x == a->zero ? "*" : a->labels[x];
    b.carrier = carrier;
    b.left_action.resize(static_cast<size_t>(a->size()) * a->size());
    b.right_action.resize(static_cast<size_t>(a->size()) * a->size());
    for (int u = 0; u < a->size(); ++u)
        for (int x = 0; x < a->size(); ++x) {
            b.left_action[static_cast<size_t>(u) * a->size() + pos[x]] = pos[a->mul(u, x)];
            b.right_action[static_cast<size_t>(u) * a->size() + pos[x]] = pos[a->mul(x, u)];
        }
    return b;
}

BiSet tensor(const BiSet& m, const BiSet& n) {
    if (!m.right || !n.left || *m.right != *n.left)
        throw std::invalid_argument("tensor: biset structures do not match over B");
    const PointedMonoid& b = *m.right;
    // smash product points: basepoint + pairs of nonbasepoints
    int total = 1 + (m.size() - 1) * (n.size() - 1);
    auto pair_index = [&](int x, int y) {
        if (x == 0 || y == 0) return 0;
        return 1 + (x - 1) * (n.size() - 1) + (y - 1);
    };
    UnionFind uf(total);
    for (int x = 1; x < m.size(); ++x)
        for (int y = 1; y < n.size(); ++y)
            for (int u = 0; u < b.size(); ++u)
                uf.unite(pair_index(m.ract(x, u), y), pair_index(x, n.lact(u, y)));
    Congruence c = blocks_from(uf, total);

    BiSet out;
    out.left = m.left;
    out.right = n.right;
    out.carrier.resize(c.block_count);
    std::vector<std::pair<int, int>> rep(c.block_count, {-1, -1});
    rep[0] = {0, 0};
    for (int x = 1; x < m.size(); ++x)
        for (int y = 1; y < n.size(); ++y) {
            int blk = c.block_of[pair_index(x, y)];
            if (rep[blk].first < 0) rep[blk] = {x, y};
        }
    for (int blk = 0; blk < c.block_count; ++blk)
        out.carrier[blk] = blk == 0 ? "*"
                                    : m.carrier[rep[blk].first] + "(x)" + n.carrier[rep[blk].second];
    out.left_action.resize(static_cast<size_t>(out.left->size()) * c.block_count);
    out.right_action.resize(static_cast<size_t>(out.right->size()) * c.block_count);
    for (int u = 0; u < out.left->size(); ++u)
        for (int blk = 0; blk < c.block_count; ++blk) {
            auto [x, y] = rep[blk];
            out.left_action[static_cast<size_t>(u) * c.block_count + blk] =
                blk == 0 ? 0 : c.block_of[pair_index(m.lact(u, x), y)];
        }
    for (int u = 0; u < out.right->size(); ++u)
        for (int blk = 0; blk < c.block_count; ++blk) {
            auto [x, y] = rep[blk];
            out.right_action[static_cast<size_t>(u) * c.block_count + blk] =
                blk == 0 ? 0 : c.block_of[pair_index(x, n.ract(y, u))];
        }
    return out;
}

namespace {

/// Left-A-equivariant pointed maps M -> P, as raw index maps.
std::vector<std::vector<int>> left_equivariant_maps(const BiSet& m, const BiSet& p) {
    const PointedMonoid& a = *m.left;
    std::vector<std::vector<int>> out;
    std::vector<int> f(m.size(), 0);
    for (;;) {
        bool ok = true;
        for (int u = 0; u < a.size() && ok; ++u)
            for (int x = 0; x < m.size() && ok; ++x)
                if (f[m.lact(u, x)] != p.lact(u, f[x])) ok = false;
        if (ok) out.push_back(f);
        size_t pos = 1;
        while (pos < f.size() && ++f[pos] == p.size()) f[pos++] = 0;
        if (pos >= f.size()) break;
    }
    if (m.size() == 1) out.assign(1, std::vector<int>{0});
    return out;
}

}  // namespace

BiSet hom_biset(const BiSet& m, const BiSet& p) {
    if (*m.left != *p.left) throw std::invalid_argument("hom_biset: left monoids differ");
    std::vector<std::vector<int>> maps = left_equivariant_maps(m, p);
    std::map<std::vector<int>, int> index;
    // basepoint: constant basepoint map
    std::vector<int> zero_map(m.size(), 0);
    std::vector<std::vector<int>> ordered{zero_map};
    for (const auto& f : maps)
        if (f != zero_map) ordered.push_back(f);
    for (size_t i = 0; i < ordered.size(); ++i) index[ordered[i]] = static_cast<int>(i);

    BiSet out;
    out.left = m.right;   // B
    out.right = p.right;  // C
    for (size_t i = 0; i < ordered.size(); ++i)
        out.carrier.push_back(i == 0 ? "*" : "f" + std::to_string(i));
    out.left_action.resize(static_cast<size_t>(out.left->size()) * ordered.size());
    out.right_action.resize(static_cast<size_t>(out.right->size()) * ordered.size());
    for (int u = 0; u < out.left->size(); ++u)
        for (size_t i = 0; i < ordered.size(); ++i) {
            std::vector<int> g(m.size());
            for (int x = 0; x < m.size(); ++x) g[x] = ordered[i][m.ract(x, u)];
            out.left_action[static_cast<size_t>(u) * ordered.size() + i] = index.at(g);
        }
    for (int u = 0; u < out.right->size(); ++u)
        for (size_t i = 0; i < ordered.size(); ++i) {
            std::vector<int> g(m.size());
            for (int x = 0; x < m.size(); ++x) g[x] = p.ract(ordered[i][x], u);
            out.right_action[static_cast<size_t>(u) * ordered.size() + i] = index.at(g);
        }
    return out;
}

std::vector<std::vector<int>> biset_morphisms(const BiSet& x, const BiSet& y) {
    if (*x.left != *y.left || *x.right != *y.right)
        throw std::invalid_argument("biset_morphisms: biset structures differ");
    std::vector<std::vector<int>> out;
    std::vector<int> f(x.size(), 0);
    for (;;) {
        bool ok = true;
        for (int u = 0; u < x.left->size() && ok; ++u)
            for (int e = 0; e < x.size() && ok; ++e)
                if (f[x.lact(u, e)] != y.lact(u, f[e])) ok = false;
        for (int u = 0; u < x.right->size() && ok; ++u)
            for (int e = 0; e < x.size() && ok; ++e)
                if (f[x.ract(e, u)] != y.ract(f[e], u)) ok = false;
        if (ok) out.push_back(f);
        size_t pos = 1;
        while (pos < f.size() && ++f[pos] == y.size()) f[pos++] = 0;
        if (pos >= f.size()) break;
    }
    if (x.size() == 1) out.assign(1, std::vector<int>{0});
    return out;
}

// --- Exactness, pullbacks, projectivity ------------------------------------

ExactnessReport is_admissible_exact(const ASetMorphism& i, const ASetMorphism& j) {
    if (i.tgt != j.src) throw std::invalid_argument("is_admissible_exact: not composable");
    ExactnessReport rep;
    for (int x = 0; x < i.src->size(); ++x)
        if (j.map[i.map[x]] != 0) {
            rep.failure = "j o i is not the basepoint map";
            return rep;
        }
    for (int x = 1; x < i.src->size(); ++x)
        if (i.map[x] == 0) {
            rep.failure = "kernel of i is not trivial";
            return rep;
        }
    if (!is_normal_morphism(i)) {
        rep.failure = "normal-failure at i";
        return rep;
    }
    if (!is_normal_morphism(j)) {
        rep.failure = "normal-failure at j";
        return rep;
    }
    std::set<int> image_i(i.map.begin(), i.map.end());
    std::set<int> kernel_j;
    for (int y = 0; y < j.src->size(); ++y)
        if (j.map[y] == 0) kernel_j.insert(y);
    if (image_i != kernel_j) {
        rep.failure = "image of i differs from kernel of j";
        return rep;
    }
    if (!is_surjective(j)) {
        rep.failure = "j is not onto";
        return rep;
    }
    rep.exact = true;
    ProjectivityResult proj = is_projective(j.tgt);
    if (proj.projective) {
        for (ASetMorphism& s : hom_set(j.tgt, j.src)) {
            bool ident = true;
            for (int k = 0; k < j.tgt->size(); ++k)
                if (j.map[s.map[k]] != k) {
                    ident = false;
                    break;
                }
            if (ident) {
                rep.split = true;
                rep.section = std::move(s);
                break;
            }
        }
    }
    return rep;
}

PullbackResult pullback(const ASetMorphism& f, const ASetMorphism& g) {
    if (f.tgt != g.tgt) throw std::invalid_argument("pullback: targets differ");
    MonoidPtr a = f.src->monoid;
    FiniteASet p;
    p.monoid = a;
    std::vector<std::pair<int, int>> pts{{0, 0}};
    for (int k = 0; k < f.src->size(); ++k)
        for (int n = 0; n < g.src->size(); ++n)
            if (f.map[k] == g.map[n] && !(k == 0 && n == 0)) pts.emplace_back(k, n);
    std::map<std::pair<int, int>, int> index;
    for (size_t t = 0; t < pts.size(); ++t) {
        index[pts[t]] = static_cast<int>(t);
        p.carrier.push_back(t == 0 ? "*"
                                   : "(" + f.src->carrier[pts[t].first] + "," +
                                         g.src->carrier[pts[t].second] + ")");
    }
    int na = a->size();
    p.action.resize(static_cast<size_t>(na) * pts.size());
    for (int u = 0; u < na; ++u)
        for (size_t t = 0; t < pts.size(); ++t) {
            std::pair<int, int> img{f.src->act(u, pts[t].first), g.src->act(u, pts[t].second)};
            p.action[static_cast<size_t>(u) * pts.size() + t] = index.at(img);
        }
    PullbackResult out;
    out.object = std::make_shared<const FiniteASet>(std::move(p));
    out.to_src_of_f = {out.object, f.src, {}};
    out.to_src_of_g = {out.object, g.src, {}};
    for (const auto& [k, n] : pts) {
        out.to_src_of_f.map.push_back(k);
        out.to_src_of_g.map.push_back(n);
    }
    return out;
}

ProjectivityResult is_projective(const ASetPtr& p) {
    ProjectivityResult res;
    res.generators = minimal_generators(*p);
    std::vector<std::string> gen_labels;
    for (int g : res.generators) gen_labels.push_back(p->carrier[g]);
    FreeASet cover = free_aset(p->monoid, gen_labels);
    // cover map: (u, x_i) -> u . gens[i]
    ASetMorphism q{cover.aset, p, std::vector<int>(cover.aset->size(), 0)};
    {
        int na = p->monoid->size();
        for (size_t g = 0; g < res.generators.size(); ++g)
            for (int u = 0; u < na; ++u) {
                if (u == p->monoid->zero) continue;
                // locate (u, x_g) in the free carrier the same way free_aset laid it out
                int idx = 1 + static_cast<int>(g) * (na - 1) + (u < p->monoid->zero ? u : u - 1);
                q.map[idx] = p->act(u, res.generators[g]);
            }
    }
    res.cover = q;
    for (ASetMorphism& s : hom_set(p, cover.aset)) {
        bool ident = true;
        for (int x = 0; x < p->size(); ++x)
            if (q.map[s.map[x]] != x) {
                ident = false;
                break;
            }
        if (ident) {
            res.projective = true;
            res.section = std::move(s);
            return res;
        }
    }
    res.reason = "the free cover on the minimal generating set admits no section";
    return res;
}

bool is_admissible_epi(const ASetMorphism& f) {
    if (!is_surjective(f) || !is_normal_morphism(f)) return false;
    if (!is_projective(f.src).projective || !is_projective(f.tgt).projective) return false;
    KernelCokernel kc = kernel_cokernel(f);
    return is_projective(kc.kernel).projective;
}

bool is_admissible_mono(const ASetMorphism& f) {
    if (!is_injective(f)) return false;
    if (!is_projective(f.src).projective || !is_projective(f.tgt).projective) return false;
    KernelCokernel kc = kernel_cokernel(f);
    return is_projective(kc.cokernel).projective;
}

}  // namespace monoidk
