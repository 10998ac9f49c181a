#pragma once

#include <vector>

#include "quadcover/bicanonical.hpp"
#include "quadcover/cover_types.hpp"

// Generators of the canonical ring R(X) = (+) H^0(n K_X).  New generators in
// degree n+1 are counted by the cokernel of
//
//   gamma_n : H^0(K_X) (x) H^0(n K_X) -> H^0((n+1) K_X).
//
// Only the trivial character summand of K_X has sections, so the image of
// gamma_n inside the summand (n+1)H + Li* is the multiplication image of
// H^0(H) (x) H^0(nH + Li*), computable by sumset counting.  The number of
// degree-2 generators has the uniform closed form (n-2)(p_g-2) - q for a
// degree-n canonical cover of a surface of minimal degree; the degree-3
// count delta depends on the type.

namespace quadcover {

// (n-2)(p_g-2) - q, returned raw (nonpositive values mean no extra
// generators are needed).
long long deg2_extra_generators(int n, long long p_g, long long q);

struct SummandCokernel {
    int character = 0;
    DivisorClass target;
    long long coker = 0;
};

struct GammaReport {
    int n = 0;
    long long coker_dim = 0;
    std::vector<SummandCokernel> per_summand;
};

// Exact cokernel of gamma_n for a smooth-base type.
GammaReport gamma_coker(const CoverDescriptor& c, int n);

// Cokernel of the full lower-degree multiplication
//   (+)_{i=1..n} R_i (x) R_{n+1-i}  ->  R_{n+1},
// i.e. the number of generators the canonical ring still needs in degree
// n+1.  Agrees with gamma_coker for n <= 2 (only R_1 products exist there
// beyond symmetry); for n >= 3 it can be smaller, e.g. on the plane types
// the degree-4 character-3 section is a product of two degree-2 generators
// and is invisible to gamma_3 alone.
GammaReport new_generator_count(const CoverDescriptor& c, int n);

// Number of degree-3 generators, closed form for all fifteen types:
// p_g - 3 for Types 1-4, 5.2, 6.2 and 9-12; 4 for 5.1/6.1; 5m-1 for 7;
// 9 for 8.1; 5m for 8.2.
long long delta(const CoverDescriptor& c);

struct GeneratorProfile {
    long long deg1 = 0;        // p_g
    long long deg2_extra = 0;  // 2 p_g - 4 - q
    long long deg3_extra = 0;  // delta
    int generated_in_degree = 0;
    std::vector<SummandCokernel> per_summand_coker;  // of gamma_2 (smooth types)
};

GeneratorProfile generator_profile(const CoverDescriptor& c);

}  // namespace quadcover
