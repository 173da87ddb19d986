#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidk/monoid.hpp"

namespace monoidk {

using MonoidPtr = std::shared_ptr<const PointedMonoid>;

MonoidPtr f1_ptr();

/// Finite pointed A-set: carrier[0] is the basepoint "*", action[a][m] the
/// index of a.m.
struct FiniteASet {
    MonoidPtr monoid;
    std::vector<std::string> carrier;
    std::vector<int> action;  // action[a * |carrier| + m]

    int size() const { return static_cast<int>(carrier.size()); }
    int act(int a, int m) const { return action[static_cast<size_t>(a) * carrier.size() + m]; }
};

using ASetPtr = std::shared_ptr<const FiniteASet>;

std::vector<ValidationIssue> validate_aset(const FiniteASet& m);

struct ASetMorphism {
    ASetPtr src;
    ASetPtr tgt;
    std::vector<int> map;  // carrier index map, map[0] == 0

    int operator()(int m) const { return map[m]; }
};

bool is_morphism(const ASetMorphism& f);
bool is_injective(const ASetMorphism& f);
bool is_surjective(const ASetMorphism& f);
/// Injective when restricted to the complement of the kernel.
bool is_normal_morphism(const ASetMorphism& f);

ASetMorphism identity_morphism(const ASetPtr& m);
ASetMorphism compose(const ASetMorphism& f, const ASetMorphism& g);  // g after f

/// A-compatible partition of a carrier; block 0 contains the basepoint.
struct Congruence {
    std::vector<int> block_of;
    int block_count = 0;
};

struct FreeASet {
    ASetPtr aset;
    std::vector<int> generator_index;  // position of each generator in the carrier
};

/// Wedge of one copy of A per generator; carrier size k(|A|-1) + 1.
FreeASet free_aset(const MonoidPtr& a, const std::vector<std::string>& generators);

struct KernelCokernel {
    ASetPtr kernel;
    ASetMorphism kernel_inclusion;
    ASetPtr cokernel;
    ASetMorphism projection;
};

KernelCokernel kernel_cokernel(const ASetMorphism& f);

struct CoequalizerResult {
    ASetPtr quotient;
    ASetMorphism projection;
    Congruence congruence;
};

CoequalizerResult coequalizer(const ASetMorphism& f, const ASetMorphism& g);

struct ProductCoproduct {
    ASetPtr product;
    std::vector<ASetMorphism> projections;
    ASetPtr coproduct;
    std::vector<ASetMorphism> injections;
};

ProductCoproduct product_coproduct(const std::vector<ASetPtr>& ms);

/// All equivariant pointed maps M -> N over the same monoid.
std::vector<ASetMorphism> hom_set(const ASetPtr& m, const ASetPtr& n);

std::vector<ASetMorphism> aset_isomorphisms(const ASetPtr& m, const ASetPtr& n);

// --- Bisets and tensor ----------------------------------------------------

/// (A,B)-biset: commuting left A-action and right B-action.
struct BiSet {
    MonoidPtr left;   // A
    MonoidPtr right;  // B
    std::vector<std::string> carrier;
    std::vector<int> left_action;   // [a * |carrier| + m] = a.m
    std::vector<int> right_action;  // [b * |carrier| + m] = m.b

    int size() const { return static_cast<int>(carrier.size()); }
    int lact(int a, int m) const { return left_action[static_cast<size_t>(a) * carrier.size() + m]; }
    int ract(int m, int b) const { return right_action[static_cast<size_t>(b) * carrier.size() + m]; }
};

std::vector<ValidationIssue> validate_biset(const BiSet& m);

/// Left A-set viewed as an (A, F1)-biset.
BiSet as_biset(const ASetPtr& m);
/// A-set over commutative A viewed as an (A, A)-biset (m.a := a.m).
BiSet commutative_biset(const ASetPtr& m);
/// The monoid A as an (A, A)-biset.
BiSet regular_biset(const MonoidPtr& a);

/// M tensor_B N for an (A,B)-biset and a (B,C)-biset; the result is an
/// (A,C)-biset, the quotient of the smash product by (mb, n) ~ (m, bn).
BiSet tensor(const BiSet& m, const BiSet& n);

/// Hom_A(M, P) for an (A,B)-biset M and an (A,C)-biset P, as a (B,C)-biset
/// whose elements are the left-A-equivariant pointed maps.
BiSet hom_biset(const BiSet& m, const BiSet& p);

/// Maps commuting with both actions (and fixing the basepoint).
std::vector<std::vector<int>> biset_morphisms(const BiSet& x, const BiSet& y);

// --- Exactness, pullbacks, projectivity ------------------------------------

struct ExactnessReport {
    bool exact = false;
    bool split = false;
    std::string failure;  // empty when exact
    std::optional<ASetMorphism> section;
};

/// Checks M -i-> N -j-> K for admissible exactness; when exact and K is
/// projective, also finds a section of j.
ExactnessReport is_admissible_exact(const ASetMorphism& i, const ASetMorphism& j);

struct PullbackResult {
    ASetPtr object;
    ASetMorphism to_src_of_f;  // projection to the source of f
    ASetMorphism to_src_of_g;
};

/// Fiber product of f: K -> M and g: N -> M with the diagonal action.
PullbackResult pullback(const ASetMorphism& f, const ASetMorphism& g);

struct ProjectivityResult {
    bool projective = false;
    std::vector<int> generators;                  // minimal generating set used
    std::optional<ASetMorphism> cover;            // free cover F ->> P
    std::optional<ASetMorphism> section;          // P -> F with cover o section = id
    std::string reason;                           // for the negative verdict
};

/// Retract-of-free-cover test; exact for finite carriers.
ProjectivityResult is_projective(const ASetPtr& p);

/// Greedy minimal generating set in carrier order (basepoint excluded).
std::vector<int> minimal_generators(const FiniteASet& m);

/// Admissible epi/mono tests within Proj(A) per the quasi-exact structure.
bool is_admissible_epi(const ASetMorphism& f);
bool is_admissible_mono(const ASetMorphism& f);

}  // namespace monoidk
