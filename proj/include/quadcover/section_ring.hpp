#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quadcover/divisor_cohomology.hpp"

// Monomial bases for H^0 of a divisor class and exact analysis of the
// multiplication maps H^0(L1) (x) H^0(L2) -> H^0(L1 + L2).
//
// The Cox coordinates are
//
//   F_e:  two fiber variables of class f (exponents alpha, beta), a section
//         variable of class C0 (gamma) and one of class C0 + e*f (delta);
//         a monomial of class a*C0 + b*f satisfies gamma + delta = a and
//         alpha + beta + e*delta = b;
//   P^2:  three linear variables (exponents i, j, k), i + j + k = d.
//
// Products of monomials are monomials, so the image of a multiplication map
// is spanned by the distinct exponent sums of basis pairs: rank = size of
// the sumset.  A dense exact-rank computation over the rationals
// (mult_map_dense_rank) is available as a cross-check; it builds the honest
// matrix of the map and row-reduces it with fraction-free elimination.

namespace quadcover {

// F_e: (alpha, beta, gamma, delta).  Plane: (i, j, k, 0).
using Monomial = std::array<int, 4>;

struct MonomialBasis {
    DivisorClass divisor;
    SurfaceKind surface;
    std::vector<Monomial> exponents;

    int dim() const { return static_cast<int>(exponents.size()); }
};

MonomialBasis monomial_basis(const DivisorClass& d, const SurfaceKind& s);

struct MultMapReport {
    long long dim_source1 = 0;
    long long dim_source2 = 0;
    long long dim_target = 0;
    long long rank = 0;
    long long coker_dim = 0;
    bool surjective = false;
};

MultMapReport mult_map(const DivisorClass& d1, const DivisorClass& d2, const SurfaceKind& s);

// Marks products of monomials inside a fixed target class; lets callers take
// the union of images over several multiplication routes into one space.
class SumsetAccumulator {
  public:
    SumsetAccumulator(const DivisorClass& target, const SurfaceKind& s);

    void add_products(const MonomialBasis& b1, const MonomialBasis& b2);
    long long rank() const { return rank_; }
    long long dim_target() const { return dim_target_; }

  private:
    SurfaceKind surface_;
    DivisorClass target_;
    long long dim_target_ = 0;
    int stride_ = 0;
    std::vector<char> hit_;
    long long rank_ = 0;
};

// Sufficient conditions for surjectivity of the multiplication map on F_e
// (e <= 2), checked in order (a)..(e) on both orderings of the pair; (e) is
// the blanket F_0 case.  Returns the first satisfied label, or nullopt when
// none applies or the standing hypotheses a_i >= 0, b_i >= a_i*e fail.
// Whenever a label is returned, mult_map on the same pair is surjective.
enum class HirzebruchCondition { A, B, C, D, E };

char condition_letter(HirzebruchCondition c);

std::optional<HirzebruchCondition> surjonhirz_condition(const DivisorClass& l1,
                                                        const DivisorClass& l2, int e);

// True iff every step E, E+F1, E+F1+F2, ... multiplies surjectively onto the
// next partial product; this implies H^0(E) (x) H^0(F1+...+Fr) -> H^0(E+sum)
// is surjective.  Throws on an empty factor list.
bool chain_surjective(const DivisorClass& e, const std::vector<DivisorClass>& factors,
                      const SurfaceKind& s);

// Exact rank over Q of the full multiplication matrix (no sumset shortcut).
// Quadratic in the source dimensions; meant for modest inputs.
long long mult_map_dense_rank(const DivisorClass& d1, const DivisorClass& d2,
                              const SurfaceKind& s);

}  // namespace quadcover
