#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monoidk/monoid.hpp"
#include "monoidk/monomial.hpp"

namespace monoidk {

/// Element of the central extension M_d of the direct sum of copies of Z/d
/// (Z when d = 0) by Z/2, in normal form. Generated by X_i (i >= 2) and a
/// central a with [X_i, X_j] = a and X_i^d = 1; for odd d the center
/// collapses and the bit is forced to 0.
struct MGroupElement {
    int d = 0;
    int central_bit = 0;
    std::map<int, long long> vec;  // index (>= 2) -> exponent, nonzero entries only

    bool operator==(const MGroupElement& o) const {
        return d == o.d && central_bit == o.central_bit && vec == o.vec;
    }
    bool operator!=(const MGroupElement& o) const { return !(*this == o); }
};

MGroupElement m_identity(int d);
MGroupElement m_alpha(int d);           // the central element (identity when d is odd)
MGroupElement m_gen(int d, int i);      // X_i
MGroupElement m_mul(const MGroupElement& x, const MGroupElement& y);
MGroupElement m_inv(const MGroupElement& x);
MGroupElement m_pow(const MGroupElement& x, long long k);

int alpha_order(int d);  // 2 for even d (including 0), 1 for odd d

std::string m_standard_form(const MGroupElement& x);

/// Word parser for the CLI: tokens "a", "Xi", "Xi^k" separated by spaces.
MGroupElement parse_m_word(int d, const std::string& word);

/// Finitely supported permutation of {1, 2, ...}; images[i-1] is the image
/// of i, identity beyond the stored prefix.
struct FinPerm {
    std::vector<int> images;

    int operator()(int i) const {
        return i >= 1 && i <= static_cast<int>(images.size()) ? images[i - 1] : i;
    }
    bool is_even() const;
};

FinPerm perm_compose(const FinPerm& s, const FinPerm& t);  // i -> s(t(i))
FinPerm perm_inverse(const FinPerm& s);

/// The coordinate-permutation action on M_d, extended multiplicatively from
/// the generator rule. Requires sigma even; the generator images involve
/// X_{sigma(1)} whenever sigma moves 1.
MGroupElement sigma_act(const FinPerm& sigma, const MGroupElement& x);

struct SigmaAuditReport {
    int d = 0;
    int relation_cases = 0;
    int relation_failures = 0;
    int composition_cases = 0;
    int composition_failures = 0;
    int automorphism_cases = 0;
    int automorphism_failures = 0;
    std::string first_failure;
};

/// Randomized audit of the permutation action: relation preservation
/// sigma([X_i, X_j]) = a, composition (st).x = s.(t.x), and the
/// automorphism property sigma(xy) = sigma(x)sigma(y). Failures are
/// reported, not patched; they occur exactly when d = 2 mod 4.
SigmaAuditReport sigma_audit(int d, int cases, std::uint64_t seed);

struct MGroupAuditReport {
    int d = 0;
    bool associativity = true;
    bool relations = true;           // [X_i,X_j] = a, X_i^d = 1, a central, a^2 = 1
    bool alpha_order_matches = true;
    SigmaAuditReport sigma;
    std::uint64_t kernel_order = 0;  // of the quotient onto the vector part
    bool parity_audit = true;        // central exponent even on conjugate words
    bool passed() const;
};

MGroupAuditReport m_group_audit(int d, std::uint64_t seed);

struct ProjectionKernelReport {
    int d = 0;
    std::uint64_t kernel_order = 0;
    bool alpha_central = true;
    bool homomorphism_sampled = true;
};

/// The quotient (r, e) -> e onto the vector group; kernel is {1, a}.
ProjectionKernelReport projection_kernel(int d, std::uint64_t seed);

/// Reduces an element over Z (d = 0) to modulus d; keeps the central bit for
/// even d, drops it for odd d.
MGroupElement reduce_mod(const MGroupElement& x, int d);

struct ParityAuditReport {
    int words = 0;
    int odd_exponents = 0;  // count of audited words with odd central exponent
};

/// Random products of conjugates w X_i^{+-d} w^{-1} over Z, checked to have
/// even central exponent in standard form.
ParityAuditReport parity_audit(int d, int words, std::uint64_t seed);

/// Semidirect model of the elementary subgroup of GL_n over a group monoid.
struct EGroupReport {
    int n = 0;
    std::uint64_t order = 0;
    std::uint64_t expected_order = 0;  // |G|^(n-1) * n!/2
    bool t_after_u_trivial = true;
    bool t_after_s_identity = true;
    bool exact_at_middle = true;       // ker(t) = image(u)
    bool matches_membership = true;    // agrees with the commutator predicate
};

/// Enumerates E_n(G_*) inside GL_n for the group monoid of g, realizes the
/// diagonal embedding u, the projection t to the permutation part, and the
/// permutation-matrix section s, and checks the exact sequence at the level
/// of matrices.
EGroupReport e_group(const FiniteGroup& g, int n, std::uint64_t size_guard = 1000000);

}  // namespace monoidk
