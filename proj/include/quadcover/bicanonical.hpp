#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcover/cover_types.hpp"
#include "quadcover/section_ring.hpp"

// Everything about the bicanonical map phi_2 of a quadruple Galois canonical
// cover.  Since K_X is the pullback of the hyperplane class H, sections of
// n*K_X push down to the four character summands H^0(nH + Li*) on the base,
// and multiplication of sections respects the algebra structure of the
// pushdown.  The only summand products that are isomorphisms onto a summand
// are O (x) Li* -> Li* and L1* (x) L2* -> L3*; all other products factor
// through multiplication by branch data and are conservatively excluded, so
// every surjectivity verdict here is a combinatorial certificate.

namespace quadcover {

struct PushedSummand {
    int character = 0;
    DivisorClass divisor;
    long long h0 = 0;
};

struct PushedSections {
    int n = 0;
    std::vector<PushedSummand> entries;
    long long total() const;
};

// Character decomposition of H^0(n K_X) for a smooth-base type.
PushedSections pushed_sections(const CoverDescriptor& c, int n);

// h^0(n K_X) for every type; singular-base types push down to Y = F_2.
long long canonical_h0(const CoverDescriptor& c, int n);

struct SummandCoverage {
    int index = 0;  // character index of the target summand
    DivisorClass target;
    long long dim_target = 0;
    long long rank = 0;
    bool covered = false;
};

struct SplitMapReport {
    std::vector<SummandCoverage> summands;
    bool surjective = false;
    long long coker_dim = 0;
};

// H^0(n1 K) (x) H^0(n2 K) -> H^0((n1+n2) K) through the pushed-down algebra.
SplitMapReport pushed_mult_map(const CoverDescriptor& c, int n1, int n2);

// The map beta: H^0(2K) (x) H^0(2K) -> H^0(4K).
SplitMapReport beta_surjective(const CoverDescriptor& c);

struct NormalGenerationVerdict {
    bool normally_generated = false;
    int steps_checked = 0;
    int first_failing_n = 0;       // 0 when every step surjects
    SplitMapReport first_failure;  // populated on failure
};

// Checks H^0(2K) (x) H^0(2nK) -> H^0((2n+2)K) for n = 1..n_max.
NormalGenerationVerdict normal_generation(const CoverDescriptor& c, int n_max);

struct BicanonicalReport {
    int degree = 1;
    bool birational = false;
    bool embedding = false;
    std::string image_descriptor;
    std::optional<long long> obstruction_h1;  // singular types
};

// Degree of phi_2 onto its image: |G| divided by the order of the subgroup
// generated by the characters whose 2K-summand has sections.  Degree-1
// smooth types are refined to embeddings via normal_generation; singular
// types are birational but obstructed at the fiber over the vertex.
BicanonicalReport factor_degree(const CoverDescriptor& c);

// Base genus of the pencil of genus-2 curves, for the types that have one.
std::optional<int> genus2_pencil(const CoverDescriptor& c);

struct ImageNormalityReport {
    bool projectively_normal = false;
    int r_bound = 0;
    std::vector<SplitMapReport> maps;  // one per r = 1..r_bound
};

// Projective normality of the image of phi_2 for the non-embedding
// smooth-base types, checked through the subalgebra phi_2 factors by.
ImageNormalityReport image_projectively_normal(const CoverDescriptor& c, int r_bound);

// Per-summand h^1(D + Li*) on the splitting's surface, and their sum.
std::vector<long long> h1_pullback_terms(const SheafSplitting& split, const DivisorClass& d);
long long h1_pullback(const SheafSplitting& split, const DivisorClass& d);

// The h^1 obstructing the restriction of |2K_X| at the fiber over the cone
// vertex (Types 9-12): value 1, meaning phi_2 is not an embedding there.
std::vector<long long> singular_obstruction_terms(const CoverDescriptor& c);
long long singular_obstruction(const CoverDescriptor& c);

}  // namespace quadcover
