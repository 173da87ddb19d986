#include "monoidk/steinberg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monoidk {

namespace {

long long norm_exp(long long e, int d) {
    if (d == 0) return e;
    long long r = e % d;
    return r < 0 ? r + d : r;
}

void normalize(MGroupElement& x) {
    for (auto it = x.vec.begin(); it != x.vec.end();) {
        it->second = norm_exp(it->second, x.d);
        if (it->second == 0)
            it = x.vec.erase(it);
        else
            ++it;
    }
    if (x.d % 2 != 0) x.central_bit = 0;
    x.central_bit &= 1;
}

// c(e, f) = sum over k > l of e_k * f_l, mod 2
int cocycle(const MGroupElement& x, const MGroupElement& y) {
    long long s = 0;
    for (const auto& [k, ek] : x.vec)
        for (const auto& [l, fl] : y.vec)
            if (k > l) s += (std::llabs(ek) & 1) * (std::llabs(fl) & 1);
    return static_cast<int>(s & 1);
}

}  // namespace

MGroupElement m_identity(int d) {
    MGroupElement x;
    x.d = d;
    return x;
}

MGroupElement m_alpha(int d) {
    MGroupElement x = m_identity(d);
    x.central_bit = d % 2 == 0 ? 1 : 0;
    return x;
}

MGroupElement m_gen(int d, int i) {
    if (i < 2) throw std::invalid_argument("m_gen: generator index must be >= 2");
    MGroupElement x = m_identity(d);
    x.vec[i] = 1;
    normalize(x);
    return x;
}

MGroupElement m_mul(const MGroupElement& x, const MGroupElement& y) {
    if (x.d != y.d) throw std::invalid_argument("m_mul: modulus mismatch");
    MGroupElement z = x;
    z.central_bit = x.central_bit ^ y.central_bit ^ cocycle(x, y);
    for (const auto& [k, e] : y.vec) z.vec[k] += e;
    normalize(z);
    return z;
}

MGroupElement m_inv(const MGroupElement& x) {
    MGroupElement n = m_identity(x.d);
    for (const auto& [k, e] : x.vec) n.vec[k] = -e;
    normalize(n);
    n.central_bit = x.central_bit ^ cocycle(x, n);
    if (x.d % 2 != 0) n.central_bit = 0;
    return n;
}

MGroupElement m_pow(const MGroupElement& x, long long k) {
    MGroupElement base = k < 0 ? m_inv(x) : x;
    if (k < 0) k = -k;
    MGroupElement acc = m_identity(x.d);
    while (k > 0) {
        if (k & 1) acc = m_mul(acc, base);
        base = m_mul(base, base);
        k >>= 1;
    }
    return acc;
}

int alpha_order(int d) { return d % 2 == 0 ? 2 : 1; }

std::string m_standard_form(const MGroupElement& x) {
    std::ostringstream os;
    bool wrote = false;
    if (x.central_bit) {
        os << "a";
        wrote = true;
    }
    for (const auto& [k, e] : x.vec) {
        if (wrote) os << " ";
        os << "X" << k << "^" << e;
        wrote = true;
    }
    return wrote ? os.str() : "1";
}

MGroupElement parse_m_word(int d, const std::string& word) {
    MGroupElement acc = m_identity(d);
    std::istringstream is(word);
    std::string tok;
    while (is >> tok) {
        if (tok == "a") {
            acc = m_mul(acc, m_alpha(d));
            continue;
        }
        if (tok.size() < 2 || tok[0] != 'X')
            throw std::invalid_argument("parse_m_word: bad token '" + tok + "'");
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                     : caret - 1));
        long long exp = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
        acc = m_mul(acc, m_pow(m_gen(d, idx), exp));
    }
    return acc;
}

bool FinPerm::is_even() const {
    int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j] - 1) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

FinPerm perm_compose(const FinPerm& s, const FinPerm& t) {
    int n = static_cast<int>(std::max(s.images.size(), t.images.size()));
    FinPerm r;
    r.images.resize(n);
    for (int i = 1; i <= n; ++i) r.images[i - 1] = s(t(i));
    return r;
}

FinPerm perm_inverse(const FinPerm& s) {
    FinPerm r;
    r.images.resize(s.images.size());
    for (int i = 1; i <= static_cast<int>(s.images.size()); ++i) r.images[s(i) - 1] = i;
    return r;
}

MGroupElement sigma_act(const FinPerm& sigma, const MGroupElement& x) {
    if (!sigma.is_even()) throw std::invalid_argument("sigma_act: permutation must be even");
    int d = x.d;
    MGroupElement acc = m_identity(d);
    if (x.central_bit) acc = m_alpha(d);
    for (const auto& [i, e] : x.vec) {
        MGroupElement gen_image;
        if (sigma(1) == 1)
            gen_image = m_gen(d, sigma(i));
        else if (sigma(i) == 1)
            gen_image = m_inv(m_gen(d, sigma(1)));
        else
            gen_image = m_mul(m_inv(m_gen(d, sigma(1))), m_gen(d, sigma(i)));
        acc = m_mul(acc, m_pow(gen_image, e));
    }
    return acc;
}

namespace {

FinPerm random_even_perm(std::mt19937_64& rng, int n) {
    FinPerm p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    std::shuffle(p.images.begin(), p.images.end(), rng);
    if (!p.is_even()) std::swap(p.images[0], p.images[1]);
    return p;
}

MGroupElement random_element(std::mt19937_64& rng, int d, int max_index) {
    MGroupElement x = m_identity(d);
    std::uniform_int_distribution<int> bit(0, 1);
    if (d % 2 == 0) x.central_bit = bit(rng);
    for (int i = 2; i <= max_index; ++i) {
        long long e;
        if (d == 0) {
            std::uniform_int_distribution<long long> ed(-3, 3);
            e = ed(rng);
        } else {
            std::uniform_int_distribution<long long> ed(0, d - 1);
            e = ed(rng);
        }
        if (e != 0) x.vec[i] = e;
    }
    return x;
}

}  // namespace

SigmaAuditReport sigma_audit(int d, int cases, std::uint64_t seed) {
    SigmaAuditReport rep;
    rep.d = d;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gi(2, 7);
    MGroupElement alpha = m_alpha(d);
    for (int c = 0; c < cases; ++c) {
        FinPerm sigma = random_even_perm(rng, 7);
        int i = gi(rng), j = gi(rng);
        if (i != j) {
            MGroupElement xi = m_gen(d, i), xj = m_gen(d, j);
            MGroupElement comm = m_mul(m_mul(xi, xj), m_mul(m_inv(xi), m_inv(xj)));
            ++rep.relation_cases;
            if (sigma_act(sigma, comm) != alpha) {
                ++rep.relation_failures;
                if (rep.first_failure.empty())
                    rep.first_failure = "relation: sigma([X" + std::to_string(i) + ",X" +
                                        std::to_string(j) + "]) != a";
            }
        }
        FinPerm tau = random_even_perm(rng, 7);
        MGroupElement x = random_element(rng, d, 7);
        ++rep.composition_cases;
        if (sigma_act(perm_compose(sigma, tau), x) != sigma_act(sigma, sigma_act(tau, x))) {
            ++rep.composition_failures;
            if (rep.first_failure.empty())
                rep.first_failure = "composition: (st).x != s.(t.x) at x = " + m_standard_form(x);
        }
        MGroupElement y = random_element(rng, d, 7);
        ++rep.automorphism_cases;
        if (sigma_act(sigma, m_mul(x, y)) != m_mul(sigma_act(sigma, x), sigma_act(sigma, y))) {
            ++rep.automorphism_failures;
            if (rep.first_failure.empty())
                rep.first_failure =
                    "automorphism: s(xy) != s(x)s(y) at x = " + m_standard_form(x);
        }
    }
    return rep;
}

bool MGroupAuditReport::passed() const {
    return associativity && relations && alpha_order_matches &&
           sigma.relation_failures == 0 && sigma.composition_failures == 0 &&
           sigma.automorphism_failures == 0 &&
           kernel_order == static_cast<std::uint64_t>(alpha_order(d)) && parity_audit;
}

MGroupAuditReport m_group_audit(int d, std::uint64_t seed) {
    MGroupAuditReport rep;
    rep.d = d;
    std::mt19937_64 rng(seed);
    for (int c = 0; c < 10000 && rep.associativity; ++c) {
        MGroupElement x = random_element(rng, d, 6);
        MGroupElement y = random_element(rng, d, 6);
        MGroupElement z = random_element(rng, d, 6);
        if (m_mul(m_mul(x, y), z) != m_mul(x, m_mul(y, z))) rep.associativity = false;
    }
    MGroupElement alpha = m_alpha(d);
    for (int i = 2; i <= 6 && rep.relations; ++i) {
        MGroupElement xi = m_gen(d, i);
        if (d > 0 && m_pow(xi, d) != m_identity(d)) rep.relations = false;
        if (m_mul(alpha, xi) != m_mul(xi, alpha)) rep.relations = false;
        for (int j = 2; j <= 6 && rep.relations; ++j) {
            if (i == j) continue;
            MGroupElement xj = m_gen(d, j);
            MGroupElement comm = m_mul(m_mul(xi, xj), m_mul(m_inv(xi), m_inv(xj)));
            if (comm != alpha) rep.relations = false;
        }
    }
    if (m_mul(alpha, alpha) != m_identity(d)) rep.relations = false;
    rep.alpha_order_matches = (alpha == m_identity(d)) == (alpha_order(d) == 1);
    rep.sigma = sigma_audit(d, 200, seed + 1);
    rep.kernel_order = projection_kernel(d, seed + 2).kernel_order;
    rep.parity_audit = parity_audit(d == 0 ? 2 : (d % 2 ? d + 1 : d), 100, seed + 3)
                           .odd_exponents == 0;
    return rep;
}

ProjectionKernelReport projection_kernel(int d, std::uint64_t seed) {
    ProjectionKernelReport rep;
    rep.d = d;
    rep.kernel_order = alpha_order(d);
    std::mt19937_64 rng(seed);
    MGroupElement alpha = m_alpha(d);
    for (int c = 0; c < 100; ++c) {
        MGroupElement x = random_element(rng, d, 7);
        if (m_mul(alpha, x) != m_mul(x, alpha)) rep.alpha_central = false;
        MGroupElement y = random_element(rng, d, 7);
        MGroupElement p = m_mul(x, y);
        // the vector part of a product is the sum of the vector parts
        MGroupElement sum = m_identity(d);
        for (const auto& [k, e] : x.vec) sum.vec[k] += e;
        for (const auto& [k, e] : y.vec) sum.vec[k] += e;
        for (auto it = sum.vec.begin(); it != sum.vec.end();) {
            it->second = d == 0 ? it->second : ((it->second % d) + d) % d;
            it = it->second == 0 ? sum.vec.erase(it) : std::next(it);
        }
        if (p.vec != sum.vec) rep.homomorphism_sampled = false;
    }
    return rep;
}

MGroupElement reduce_mod(const MGroupElement& x, int d) {
    MGroupElement r = x;
    r.d = d;
    normalize(r);
    return r;
}

ParityAuditReport parity_audit(int d, int words, std::uint64_t seed) {
    ParityAuditReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gi(2, 6);
    std::uniform_int_distribution<int> nfac(1, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int w = 0; w < words; ++w) {
        MGroupElement prod = m_identity(0);
        int factors = nfac(rng);
        for (int f = 0; f < factors; ++f) {
            MGroupElement conj = random_element(rng, 0, 6);
            MGroupElement core = m_pow(m_gen(0, gi(rng)), sign(rng) ? d : -d);
            prod = m_mul(prod, m_mul(m_mul(conj, core), m_inv(conj)));
        }
        ++rep.words;
        if (prod.central_bit != 0) ++rep.odd_exponents;
    }
    return rep;
}

EGroupReport e_group(const FiniteGroup& g, int n, std::uint64_t size_guard) {
    if (n < 3) throw std::invalid_argument("e_group: need n >= 3");
    EGroupReport rep;
    rep.n = n;
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    std::uint64_t gpow = 1;
    for (int k = 1; k < n; ++k) gpow *= g.size();
    rep.expected_order = gpow * fact / 2;

    PointedMonoid gm = group_monoid(g);
    std::vector<RowMonomicMatrix> gl = enumerate_gl(gm, n, size_guard);
    std::set<RowMonomicMatrix> elementary;
    for (const auto& m : gl)
        if (in_elementary(gm, m)) elementary.insert(m);
    rep.order = elementary.size();

    std::vector<RowMonomicMatrix> brute = brute_elementary(gm, n, size_guard);
    rep.matches_membership =
        elementary.size() == brute.size() &&
        std::equal(brute.begin(), brute.end(), elementary.begin());

    // u: (g_2, ..., g_n) -> Diag((g_2...g_n)^{-1}, g_2, ..., g_n)
    std::set<RowMonomicMatrix> image_u;
    std::vector<int> tuple(n - 1, 0);
    for (;;) {
        int prod = g.identity;
        for (int v : tuple) prod = g.mul(prod, v);
        MonomialDecomposition dec;
        dec.perm.resize(n);
        std::iota(dec.perm.begin(), dec.perm.end(), 0);
        dec.diag.resize(n);
        dec.diag[0] = g.inv(prod) + 1;  // monoid index of a group element is +1
        for (int k = 1; k < n; ++k) dec.diag[k] = tuple[k - 1] + 1;
        RowMonomicMatrix m = recompose(gm, dec);
        image_u.insert(m);
        if (elementary.count(m) == 0) rep.exact_at_middle = false;
        DecomposeResult dr = decompose(gm, m);
        for (int k = 0; k < n; ++k)
            if (dr.decomposition->perm[k] != k) rep.t_after_u_trivial = false;
        size_t pos = 0;
        while (pos < tuple.size() && ++tuple[pos] == g.size()) tuple[pos++] = 0;
        if (pos == tuple.size()) break;
    }
    // exactness at the middle: diagonal elements of E are exactly image(u)
    for (const auto& m : elementary) {
        DecomposeResult dr = decompose(gm, m);
        bool diagonal = true;
        for (int k = 0; k < n; ++k)
            if (dr.decomposition->perm[k] != k) diagonal = false;
        if (diagonal && image_u.count(m) == 0) rep.exact_at_middle = false;
    }

    // s: even permutation -> permutation matrix; t o s = id
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!is_even_permutation(perm)) continue;
        RowMonomicMatrix m = permutation_matrix(gm, perm);
        if (elementary.count(m) == 0) rep.t_after_s_identity = false;
        DecomposeResult dr = decompose(gm, m);
        if (dr.decomposition->perm != perm) rep.t_after_s_identity = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

}  // namespace monoidk
