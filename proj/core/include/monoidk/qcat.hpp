#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoidk/abgroup.hpp"
#include "monoidk/aset.hpp"

namespace monoidk {

/// Morphism of the span category between free objects of ranks src and tgt:
/// an admissible epi from the middle onto the source realization and an
/// admissible mono into the target realization. Stored on the standard free
/// realizations and canonicalized within its iso class (precomposition of
/// both legs with automorphisms of the middle).
struct QSpan {
    int src = 0;
    int mid = 0;
    int tgt = 0;
    std::vector<int> epi;   // carrier map F_mid -> F_src
    std::vector<int> mono;  // carrier map F_mid -> F_tgt

    bool operator==(const QSpan& o) const = default;
    bool operator<(const QSpan& o) const;
};

/// Standard free realization of rank r (generators x1..xr); cached per call.
ASetPtr free_rank(const MonoidPtr& a, int r);

QSpan identity_span(const MonoidPtr& a, int r);
QSpan canonicalize_span(const MonoidPtr& a, const QSpan& s);
bool spans_isomorphic(const MonoidPtr& a, const QSpan& s1, const QSpan& s2);

/// Composite via the fiber product of the mono of s1 and the epi of s2.
QSpan compose_spans(const MonoidPtr& a, const QSpan& s1, const QSpan& s2);

struct Nerve {
    MonoidPtr monoid;
    int rank_bound = 0;
    std::vector<QSpan> edges;  // all span iso classes, canonical order
    struct Triangle {
        int e1 = 0;         // edge src -> mid vertex
        int e2 = 0;         // edge mid -> tgt vertex
        int composite = 0;  // index of compose_spans(e1, e2)
    };
    std::vector<Triangle> triangles;
};

/// 2-skeleton of the nerve of the rank-bounded span category.
Nerve build_nerve(const MonoidPtr& a, int rank_bound, std::uint64_t size_guard = 1000000);

struct EdgePathPresentation {
    std::vector<int> edge_generator;           // edge -> generator index, -1 for tree edges
    std::vector<int> generator_edge;           // generator -> edge index
    std::vector<std::vector<long long>> relators;  // exponent vectors over generators
    FgAbelianGroup abelianization;
    std::vector<long long> generator_weights;  // rank-homomorphism image of each loop
    bool rank_hom_well_defined = false;
    bool rank_hom_surjective = false;
    bool wedge_relation_holds = false;         // [P v Q] = [P] + [Q] among loop classes
};

/// Edge-path presentation of the fundamental group of the nerve: BFS spanning
/// tree, one generator per non-tree edge, one relator per triangle;
/// abelianized via Smith normal form. The rank function (tgt - mid per span)
/// induces the homomorphism onto Z used in the report.
EdgePathPresentation pi1_presentation(const Nerve& nerve);

}  // namespace monoidk
