#include "monoidk/qcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace monoidk {

bool QSpan::operator<(const QSpan& o) const {
    return std::tie(src, tgt, mid, epi, mono) < std::tie(o.src, o.tgt, o.mid, o.epi, o.mono);
}

ASetPtr free_rank(const MonoidPtr& a, int r) {
    static std::map<std::pair<const PointedMonoid*, int>, ASetPtr> cache;
    auto key = std::make_pair(a.get(), r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::string> gens;
    for (int i = 1; i <= r; ++i) gens.push_back("x" + std::to_string(i));
    ASetPtr f = free_aset(a, gens).aset;
    cache.emplace(key, f);
    return f;
}

QSpan identity_span(const MonoidPtr& a, int r) {
    QSpan s;
    s.src = s.mid = s.tgt = r;
    int n = free_rank(a, r)->size();
    s.epi.resize(n);
    std::iota(s.epi.begin(), s.epi.end(), 0);
    s.mono = s.epi;
    return canonicalize_span(a, s);
}

QSpan canonicalize_span(const MonoidPtr& a, const QSpan& s) {
    ASetPtr f = free_rank(a, s.mid);
    QSpan best = s;
    for (const ASetMorphism& phi : aset_isomorphisms(f, f)) {
        QSpan cand = s;
        for (int x = 0; x < f->size(); ++x) {
            cand.epi[x] = s.epi[phi.map[x]];
            cand.mono[x] = s.mono[phi.map[x]];
        }
        if (cand < best) best = cand;
    }
    return best;
}

bool spans_isomorphic(const MonoidPtr& a, const QSpan& s1, const QSpan& s2) {
    return canonicalize_span(a, s1) == canonicalize_span(a, s2);
}

QSpan compose_spans(const MonoidPtr& a, const QSpan& s1, const QSpan& s2) {
    if (s1.tgt != s2.src) throw std::invalid_argument("compose_spans: object mismatch");
    ASetPtr fm1 = free_rank(a, s1.mid);
    ASetPtr fm2 = free_rank(a, s2.mid);
    ASetPtr fn = free_rank(a, s1.tgt);
    ASetMorphism mono1{fm1, fn, s1.mono};
    ASetMorphism epi2{fm2, fn, s2.epi};
    PullbackResult pb = pullback(mono1, epi2);

    // identify the fiber product with the standard free realization
    int unit_block = a->size() - 1;
    int q = (pb.object->size() - 1) / unit_block;
    ASetPtr fq = free_rank(a, q);
    std::vector<ASetMorphism> isos = aset_isomorphisms(fq, pb.object);
    if (isos.empty())
        throw std::logic_error("compose_spans: fiber product is not free of the expected rank");
    const ASetMorphism& phi = isos.front();

    QSpan out;
    out.src = s1.src;
    out.mid = q;
    out.tgt = s2.tgt;
    out.epi.resize(fq->size());
    out.mono.resize(fq->size());
    for (int x = 0; x < fq->size(); ++x) {
        int y = phi.map[x];
        out.epi[x] = s1.epi[pb.to_src_of_f.map[y]];
        out.mono[x] = s2.mono[pb.to_src_of_g.map[y]];
    }
    return canonicalize_span(a, out);
}

Nerve build_nerve(const MonoidPtr& a, int rank_bound, std::uint64_t size_guard) {
    Nerve nerve;
    nerve.monoid = a;
    nerve.rank_bound = rank_bound;
    std::set<QSpan> edge_set;
    for (int m = 0; m <= rank_bound; ++m)
        for (int n = m; n <= rank_bound; ++n)
            for (int p = m; p <= n; ++p) {
                ASetPtr fp = free_rank(a, p);
                std::vector<ASetMorphism> epis, monos;
                for (ASetMorphism& f : hom_set(fp, free_rank(a, m)))
                    if (is_admissible_epi(f)) epis.push_back(std::move(f));
                for (ASetMorphism& f : hom_set(fp, free_rank(a, n)))
                    if (is_admissible_mono(f)) monos.push_back(std::move(f));
                for (const auto& e : epis)
                    for (const auto& i : monos) {
                        QSpan s;
                        s.src = m;
                        s.mid = p;
                        s.tgt = n;
                        s.epi = e.map;
                        s.mono = i.map;
                        edge_set.insert(canonicalize_span(a, s));
                        if (edge_set.size() > size_guard)
                            throw std::runtime_error("build_nerve: size guard exceeded");
                    }
            }
    nerve.edges.assign(edge_set.begin(), edge_set.end());

    std::map<QSpan, int> index;
    for (size_t i = 0; i < nerve.edges.size(); ++i) index[nerve.edges[i]] = static_cast<int>(i);
    for (size_t i = 0; i < nerve.edges.size(); ++i)
        for (size_t j = 0; j < nerve.edges.size(); ++j) {
            if (nerve.edges[i].tgt != nerve.edges[j].src) continue;
            QSpan comp = compose_spans(a, nerve.edges[i], nerve.edges[j]);
            auto it = index.find(comp);
            if (it == index.end())
                throw std::logic_error("build_nerve: composite span missing from enumeration");
            nerve.triangles.push_back({static_cast<int>(i), static_cast<int>(j), it->second});
        }
    return nerve;
}

namespace {

// membership of x in the column lattice of r, via UMV = S
bool in_column_lattice(const IntMatrix& r, const std::vector<long long>& x) {
    SmithResult snf = smith_normal_form(r);
    int n = r.rows;
    std::vector<Int> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += snf.u.at(i, j) * Int(x[j]);
    int diag = std::min(r.rows, r.cols);
    for (int i = 0; i < n; ++i) {
        Int s = i < diag ? snf.s.at(i, i) : Int(0);
        if (s == 0) {
            if (y[i] != 0) return false;
        } else if (y[i] % s != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

EdgePathPresentation pi1_presentation(const Nerve& nerve) {
    const MonoidPtr& a = nerve.monoid;
    int vertices = nerve.rank_bound + 1;
    int ne = static_cast<int>(nerve.edges.size());

    // BFS spanning tree from rank 0 in canonical edge order
    std::vector<int> parent_edge(vertices, -1);
    std::vector<int> parent_dir(vertices, 0);  // +1: tree edge points toward vertex
    std::vector<char> visited(vertices, 0);
    visited[0] = 1;
    std::vector<char> in_tree(ne, 0);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < ne && !grew; ++e) {
            int u = nerve.edges[e].src, v = nerve.edges[e].tgt;
            if (visited[u] && !visited[v]) {
                visited[v] = 1;
                in_tree[e] = 1;
                parent_edge[v] = e;
                parent_dir[v] = 1;
                grew = true;
            } else if (visited[v] && !visited[u]) {
                visited[u] = 1;
                in_tree[e] = 1;
                parent_edge[u] = e;
                parent_dir[u] = -1;
                grew = true;
            }
        }
    }
    for (int v = 0; v < vertices; ++v)
        if (!visited[v]) throw std::logic_error("pi1_presentation: nerve is disconnected");

    EdgePathPresentation pres;
    pres.edge_generator.assign(ne, -1);
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) {
            pres.edge_generator[e] = static_cast<int>(pres.generator_edge.size());
            pres.generator_edge.push_back(e);
        }
    int ng = static_cast<int>(pres.generator_edge.size());

    for (const auto& tri : nerve.triangles) {
        std::vector<long long> rel(ng, 0);
        if (pres.edge_generator[tri.e1] >= 0) rel[pres.edge_generator[tri.e1]] += 1;
        if (pres.edge_generator[tri.e2] >= 0) rel[pres.edge_generator[tri.e2]] += 1;
        if (pres.edge_generator[tri.composite] >= 0) rel[pres.edge_generator[tri.composite]] -= 1;
        if (std::any_of(rel.begin(), rel.end(), [](long long v) { return v != 0; }))
            pres.relators.push_back(std::move(rel));
    }

    IntMatrix rel_matrix(ng, static_cast<int>(pres.relators.size()));
    for (size_t c = 0; c < pres.relators.size(); ++c)
        for (int g = 0; g < ng; ++g) rel_matrix.at(g, static_cast<int>(c)) = pres.relators[c][g];
    pres.abelianization = cokernel(rel_matrix);

    // rank homomorphism: each span contributes tgt - mid
    auto weight = [&](int e) {
        return static_cast<long long>(nerve.edges[e].tgt - nerve.edges[e].mid);
    };
    pres.rank_hom_well_defined = true;
    for (const auto& tri : nerve.triangles)
        if (weight(tri.e1) + weight(tri.e2) != weight(tri.composite))
            pres.rank_hom_well_defined = false;
    std::vector<long long> depth(vertices, 0);
    // vertices are ranks; resolve depths by walking parents
    for (int v = 1; v < vertices; ++v) {
        long long w = 0;
        int cur = v;
        while (cur != 0) {
            int e = parent_edge[cur];
            w += parent_dir[cur] * weight(e);
            cur = parent_dir[cur] > 0 ? nerve.edges[e].src : nerve.edges[e].tgt;
        }
        depth[v] = w;
    }
    long long g = 0;
    for (int gi = 0; gi < ng; ++gi) {
        int e = pres.generator_edge[gi];
        long long w = depth[nerve.edges[e].src] + weight(e) - depth[nerve.edges[e].tgt];
        pres.generator_weights.push_back(w);
        g = std::gcd(g, w);
    }
    pres.rank_hom_surjective = (g == 1);

    // loop class of an edge in the abelianization: its generator, 0 for tree edges
    auto loop_class = [&](const QSpan& s) {
        QSpan c = canonicalize_span(a, s);
        auto it = std::lower_bound(nerve.edges.begin(), nerve.edges.end(), c);
        if (it == nerve.edges.end() || !(*it == c))
            throw std::logic_error("pi1_presentation: span not found in nerve");
        std::vector<long long> v(ng, 0);
        int gi = pres.edge_generator[it - nerve.edges.begin()];
        if (gi >= 0) v[gi] = 1;
        return v;
    };
    // [P]: difference of the two canonical arrows 0 -> P (middle P vs middle 0)
    auto object_class = [&](int p) {
        ASetPtr fp = free_rank(a, p);
        QSpan through;
        through.src = 0;
        through.mid = p;
        through.tgt = p;
        through.epi.assign(fp->size(), 0);
        through.mono.resize(fp->size());
        std::iota(through.mono.begin(), through.mono.end(), 0);
        QSpan around;
        around.src = 0;
        around.mid = 0;
        around.tgt = p;
        around.epi = {0};
        around.mono = {0};
        std::vector<long long> v = loop_class(through);
        std::vector<long long> w = loop_class(around);
        for (int i = 0; i < ng; ++i) v[i] -= w[i];
        return v;
    };
    pres.wedge_relation_holds = true;
    for (int p = 1; p <= nerve.rank_bound; ++p)
        for (int q = 1; p + q <= nerve.rank_bound; ++q) {
            std::vector<long long> lhs = object_class(p + q);
            std::vector<long long> rp = object_class(p), rq = object_class(q);
            for (int i = 0; i < ng; ++i) lhs[i] -= rp[i] + rq[i];
            if (!in_column_lattice(rel_matrix, lhs)) pres.wedge_relation_holds = false;
        }
    return pres;
}

}  // namespace monoidk
