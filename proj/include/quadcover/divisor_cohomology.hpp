#pragma once

#include <stdexcept>
#include <string>

// Exact intersection theory and sheaf cohomology for divisor classes on the
// two smooth ambient surfaces that occur in this toolkit:
//
//   * the projective plane P^2, divisor classes d * (line);
//   * the Hirzebruch surface F_e (ruled over P^1), divisor classes
//     a*C0 + b*f, where C0 is a section with C0^2 = -e, f a fiber,
//     C0.f = 1, f^2 = 0.
//
// Everything here is integer arithmetic on closed forms:
//
//   h^0(aC0 + bf) = sum_{i=0..a} max(0, b - i*e + 1)      (a >= 0, else 0)
//   chi(aC0 + bf) = (a+1)(b+1) - e*a*(a+1)/2              (Riemann-Roch)
//   h^2(D)        = h^0(K - D)                            (Serre duality)
//   h^1(D)        = h^0(D) + h^2(D) - chi(D)
//
// with K = -2C0 - (e+2)f on F_e and K = -3*(line) on the plane.  An
// independent lattice-point oracle (oracle_h0) recounts h^0 by enumerating
// monomial exponents and is checked against the closed form in the tests.

namespace quadcover {

struct SurfaceKind {
    enum class Kind { Plane, Hirzebruch };

    Kind kind = Kind::Plane;
    int e = 0;  // Hirzebruch invariant; meaningless for the plane

    static SurfaceKind plane() { return {Kind::Plane, 0}; }
    static SurfaceKind hirzebruch(int e);

    bool is_plane() const { return kind == Kind::Plane; }
    bool operator==(const SurfaceKind&) const = default;
    std::string name() const;  // "P2" or "F0", "F1", ...
};

// A divisor class tagged with the surface family it lives on.  Plane classes
// keep the degree in `a` and have b == 0; ruled classes are a*C0 + b*f.
// Negative coefficients are allowed everywhere (Serre duals, q-computations).
struct DivisorClass {
    bool on_plane = false;
    int a = 0;
    int b = 0;

    static DivisorClass plane(int d) { return {true, d, 0}; }
    static DivisorClass ruled(int a, int b) { return {false, a, b}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const DivisorClass&) const = default;
    std::string str() const;  // "2C0+3f", "-f", "O", "4L", ...
};

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator-(const DivisorClass& d);
DivisorClass operator*(int k, const DivisorClass& d);

struct CohomologySummary {
    long long h0 = 0;
    long long h1 = 0;
    long long h2 = 0;
    long long chi = 0;
};

// Throws std::invalid_argument when D does not live on S.
void require_on(const DivisorClass& d, const SurfaceKind& s);

// Intersection pairing.  Throws on mismatched surface kinds.
long long intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceKind& s);

DivisorClass canonical_class(const SurfaceKind& s);

long long euler_char(const DivisorClass& d, const SurfaceKind& s);

long long h0(const DivisorClass& d, const SurfaceKind& s);

// Direct count of monomial exponent solutions; must agree with h0 everywhere.
// On F_e: tuples (alpha,beta,gamma,delta) >= 0 with gamma+delta = a and
// alpha+beta+e*delta = b.  On the plane: monomials of degree d in 3 variables.
long long oracle_h0(const DivisorClass& d, const SurfaceKind& s);

CohomologySummary cohomology(const DivisorClass& d, const SurfaceKind& s);

}  // namespace quadcover
