#include "monoidk/abgroup.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace monoidk {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> d;
    int n = std::min(s.rows, s.cols);
    for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

struct SnfWorker {
    IntMatrix a, u, v;

    explicit SnfWorker(const IntMatrix& m)
        : a(m), u(IntMatrix::identity(m.rows)), v(IntMatrix::identity(m.cols)) {}

    void swap_rows(int i, int j) {
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
        for (int c = 0; c < a.cols; ++c) a.at(dst, c) += q * a.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& q) {
        for (int r = 0; r < a.rows; ++r) a.at(r, dst) += q * a.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < a.rows; ++i)
            for (int j = t; j < a.cols; ++j) {
                if (a.at(i, j) == 0) continue;
                Int m = abs(a.at(i, j));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        int n = std::min(a.rows, a.cols);
        for (int t = 0; t < n; ++t) {
            for (;;) {
                int pi, pj;
                if (!find_pivot(t, pi, pj)) return;
                if (pi != t) swap_rows(t, pi);
                if (pj != t) swap_cols(t, pj);
                if (a.at(t, t) < 0) negate_row(t);

                bool reduced = false;
                for (int i = t + 1; i < a.rows; ++i) {
                    if (a.at(i, t) == 0) continue;
                    Int q = a.at(i, t) / a.at(t, t);
                    add_row(i, t, -q);
                    if (a.at(i, t) != 0) reduced = true;
                }
                if (reduced) continue;
                for (int j = t + 1; j < a.cols; ++j) {
                    if (a.at(t, j) == 0) continue;
                    Int q = a.at(t, j) / a.at(t, t);
                    add_col(j, t, -q);
                    if (a.at(t, j) != 0) reduced = true;
                }
                if (reduced) continue;

                // Force divisibility of the remaining block by the pivot.
                bool fixed = false;
                for (int i = t + 1; i < a.rows && !fixed; ++i)
                    for (int j = t + 1; j < a.cols && !fixed; ++j)
                        if (a.at(i, j) % a.at(t, t) != 0) {
                            add_row(t, i, 1);
                            fixed = true;
                        }
                if (!fixed) break;
            }
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SnfWorker w(m);
    w.run();
    return {std::move(w.a), std::move(w.u), std::move(w.v)};
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& d) {
    if (d < 0) throw std::invalid_argument("cyclic: negative order");
    if (d == 0) return free_group(1);
    if (d == 1) return trivial();
    return {0, {d}};
}

FgAbelianGroup FgAbelianGroup::from_summands(int free_rank, const std::vector<Int>& orders) {
    std::vector<Int> ds;
    int fr = free_rank;
    for (const Int& d : orders) {
        if (d < 0) throw std::invalid_argument("from_summands: negative order");
        if (d == 0)
            ++fr;
        else if (d > 1)
            ds.push_back(d);
    }
    SmithResult snf = smith_normal_form(IntMatrix::diagonal(ds));
    FgAbelianGroup g;
    g.free_rank = fr;
    for (const Int& d : snf.diagonal())
        if (d > 1) g.torsion.push_back(d);
    return g;
}

Int FgAbelianGroup::order() const {
    if (free_rank > 0) return 0;
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const Int& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return FgAbelianGroup::from_summands(a.free_rank + b.free_rank, orders);
}

FgAbelianGroup cokernel(const IntMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    std::vector<Int> diag = snf.diagonal();
    int nonzero = 0;
    std::vector<Int> tors;
    for (const Int& d : diag)
        if (d != 0) {
            ++nonzero;
            if (d > 1) tors.push_back(d);
        }
    return FgAbelianGroup::from_summands(m.rows - nonzero, tors);
}

std::pair<FgAbelianGroup, FgAbelianGroup> tensor_tor(const FgAbelianGroup& g,
                                                     const FgAbelianGroup& h) {
    std::vector<Int> tens;
    std::vector<Int> tor;
    // free x free -> free handled via rank count
    int free_rank = g.free_rank * h.free_rank;
    for (const Int& d : g.torsion)
        for (int j = 0; j < h.free_rank; ++j) tens.push_back(d);
    for (const Int& e : h.torsion)
        for (int i = 0; i < g.free_rank; ++i) tens.push_back(e);
    for (const Int& d : g.torsion)
        for (const Int& e : h.torsion) {
            Int c = gcd(d, e);
            tens.push_back(c);
            tor.push_back(c);
        }
    return {FgAbelianGroup::from_summands(free_rank, tens),
            FgAbelianGroup::from_summands(0, tor)};
}

namespace {

// H_0..H_3 of a cyclic group Z (d = 0) or Z/d, integral coefficients.
std::array<FgAbelianGroup, 4> cyclic_homology(const Int& d) {
    std::array<FgAbelianGroup, 4> h;
    h[0] = FgAbelianGroup::free_group(1);
    if (d == 0) {
        h[1] = FgAbelianGroup::free_group(1);
    } else {
        h[1] = FgAbelianGroup::cyclic(d);
        h[3] = FgAbelianGroup::cyclic(d);
    }
    return h;
}

std::array<FgAbelianGroup, 4> kunneth(const std::array<FgAbelianGroup, 4>& a,
                                      const std::array<FgAbelianGroup, 4>& b) {
    std::array<FgAbelianGroup, 4> out;
    for (int n = 0; n <= 3; ++n) {
        FgAbelianGroup acc;
        for (int p = 0; p <= n; ++p) acc = direct_sum(acc, tensor_tor(a[p], b[n - p]).first);
        for (int p = 0; p <= n - 1; ++p)
            acc = direct_sum(acc, tensor_tor(a[p], b[n - 1 - p]).second);
        out[n] = acc;
    }
    return out;
}

}  // namespace

FgAbelianGroup homology(const FgAbelianGroup& g, int k, Coefficients coeff) {
    if (k < 0 || k > 3) throw std::invalid_argument("homology: only degrees 0..3 supported");
    std::array<FgAbelianGroup, 4> h;
    h[0] = FgAbelianGroup::free_group(1);  // homology of the trivial group
    for (int i = 0; i < g.free_rank; ++i) h = kunneth(h, cyclic_homology(0));
    for (const Int& d : g.torsion) h = kunneth(h, cyclic_homology(d));
    if (coeff == Coefficients::Z) return h[k];
    // Universal coefficients: H_k(G; Z/2) = H_k tensor Z/2 + Tor(H_{k-1}, Z/2).
    FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
    FgAbelianGroup out = tensor_tor(h[k], z2).first;
    if (k >= 1) out = direct_sum(out, tensor_tor(h[k - 1], z2).second);
    return out;
}

bool iso_test(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

FgAbelianGroup parse_group_spec(const std::string& spec) {
    int free_rank = 0;
    std::vector<Int> orders;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("group spec: missing '=' in '" + part + "'");
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (key == "free") {
            free_rank = std::stoi(val);
            if (free_rank < 0) throw std::invalid_argument("group spec: negative free rank");
        } else if (key == "torsion") {
            std::stringstream vs(val);
            std::string tok;
            while (std::getline(vs, tok, ',')) {
                if (tok.empty()) continue;
                Int d(tok);
                if (d < 1) throw std::invalid_argument("group spec: torsion order must be >= 1");
                orders.push_back(d);
            }
        } else {
            throw std::invalid_argument("group spec: unknown key '" + key + "'");
        }
    }
    return FgAbelianGroup::from_summands(free_rank, orders);
}

std::string group_spec(const FgAbelianGroup& g) {
    std::ostringstream os;
    os << "free=" << g.free_rank << ";torsion=";
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) os << ",";
        os << g.torsion[i];
    }
    return os.str();
}

}  // namespace monoidk
