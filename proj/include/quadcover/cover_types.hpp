#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadcover/divisor_cohomology.hpp"

// The classification of quadruple Galois canonical covers phi: X -> W of a
// surface W of minimal degree.  Fifteen types:
//
//   1, 2          W = P^2
//   3, 4          W = S(m, m-e), the scroll F_e embedded by |C0 + mf|,
//                 0 <= e <= 2, m >= e+1
//   5.1/5.2, 6.1/6.2, 7, 8.1/8.2
//                 W = S(m, m), i.e. F_0 embedded by |C0 + mf|
//   9, 10, 11, 12 W = S(0,2), the quadric cone; its minimal
//                 desingularization is Y = F_2 with H_Y = C0 + 2f
//
// Each type fixes the Galois group (Z4 or Z2 x Z2) and, for a smooth base,
// the branch classes D1, D2.  The pushdown of O_X splits into character
// eigensheaves O + L1* + L2* + L3* with
//
//   Z2 x Z2:  L1* = -D2/2,        L2* = -D1/2,   L3* = L1* + L2*
//   Z4:       L1* = -D1/2 - D2/4, L2* = -D2/2,   L3* = L1* + L2*
//
// computed here in quarter-integer arithmetic with an integrality check.
// For the singular-base types the relevant splitting lives on Y = F_2 and
// is tabulated (y_splitting), together with the numerical data of the
// exceptional locus of the desingularized diagram.

namespace quadcover {

enum class GaloisGroup { Z4, Z2xZ2 };

std::string to_string(GaloisGroup g);

// Character composition in the group of order 4.  Characters are indexed
// 0..3: for Z4 the index is the character itself; for Z2 x Z2 the two bits
// are the two factors, so composition is XOR.
int compose_characters(GaloisGroup g, int c1, int c2);

// Subgroup of the character group generated by a set (sorted, contains 0).
std::vector<int> subgroup_elements(GaloisGroup g, const std::vector<int>& generators);
int subgroup_order(GaloisGroup g, const std::vector<int>& generators);

std::string character_label(GaloisGroup g, int c);

enum class TypeId { T1, T2, T3, T4, T5_1, T5_2, T6_1, T6_2, T7, T8_1, T8_2, T9, T10, T11, T12 };

inline constexpr std::array<TypeId, 15> all_type_ids = {
    TypeId::T1,   TypeId::T2,   TypeId::T3,   TypeId::T4,  TypeId::T5_1,
    TypeId::T5_2, TypeId::T6_1, TypeId::T6_2, TypeId::T7,  TypeId::T8_1,
    TypeId::T8_2, TypeId::T9,   TypeId::T10,  TypeId::T11, TypeId::T12};

std::string to_string(TypeId t);
std::optional<TypeId> parse_type_id(const std::string& s);

bool is_singular_base(TypeId t);   // Types 9-12 (W = S(0,2))
bool has_m_parameter(TypeId t);    // m ranges over a grid
bool has_e_parameter(TypeId t);    // Types 3, 4 only

// Reduced fraction with positive denominator; exact arithmetic only.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational(long long n) : num(n), den(1) {}

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

Rational operator+(Rational lhs, Rational rhs);
Rational operator*(Rational lhs, Rational rhs);

// One exceptional curve F_i on the desingularization, with its multiplicity
// k_i in the pullback of C0, its self-intersection, the coefficient of F_i
// in K_resolution - pullback(K_X), and F_i . (pullback of a general fiber).
struct ExceptionalComponent {
    int pullback_multiplicity = 0;
    Rational self_intersection;
    int canonical_correction = 0;
    int fiber_intersection = 0;
};

struct ResolutionData {
    bool crepant = false;
    int fiber_point_count = 0;  // points of phi^{-1}{vertex}
    std::vector<ExceptionalComponent> exceptional;
};

struct SheafSplitting {
    GaloisGroup group;
    SurfaceKind surface;
    // summands[i] has character index i; summands[0] is the trivial class.
    std::array<DivisorClass, 4> summands;
};

struct CoverDescriptor {
    TypeId type;
    int m = 0;
    int e = 0;
    GaloisGroup group = GaloisGroup::Z4;
    bool singular_base = false;
    // Smooth types: W itself and its hyperplane class.  Singular types: the
    // desingularization Y = F_2 with H_Y = C0 + 2f.
    SurfaceKind surface;
    DivisorClass hyperplane;
    DivisorClass branch1, branch2;  // D1, D2 (smooth-base types)
    ResolutionData resolution;      // singular-base types
    std::string base_name;          // "P2", "S(3,2)", "S(0,2)", ...
};

// Builds the descriptor for a type, validating the parameter constraints
// (throws std::invalid_argument naming the violated bound).  Types without a
// parameter reject explicit values other than the forced ones.
CoverDescriptor make_cover(TypeId t, std::optional<int> m = std::nullopt,
                           std::optional<int> e = std::nullopt);

// Pushdown splitting on W for the smooth-base types, derived from the group
// and the branch classes.  Throws for Types 9-12.
SheafSplitting splitting(const CoverDescriptor& c);

// Splitting of the pushdown to Y = F_2 for Types 9-12.  Throws otherwise.
// Note the Type 11/12 splitting repeats a summand and is not of character
// product form (summand 3 != summand 1 + summand 2).
SheafSplitting y_splitting(const CoverDescriptor& c);

struct SurfaceInvariants {
    long long p_g = 0;
    long long q = 0;
    long long K2 = 0;
    long long chi = 0;  // chi(O_X) = 1 - q + p_g
};

// Computed from the splitting: p_g = sum h^0(H + Li*), q = sum h^1(Li*),
// K^2 = 4 H^2.  Works for all fifteen types (singular ones via Y = F_2).
SurfaceInvariants invariants(const CoverDescriptor& c);

// Expected classification-row values (closed forms), for cross-checking.
SurfaceInvariants expected_invariants(TypeId t, int m, int e);

// Invariants of a product of smooth curves of genera g1 and g2.
SurfaceInvariants product_invariants(int g1, int g2);

// All admissible descriptors with m <= m_max, ordered by type then m.
std::vector<CoverDescriptor> all_covers(int m_max);

}  // namespace quadcover
