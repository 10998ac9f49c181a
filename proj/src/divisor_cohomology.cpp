#include "quadcover/divisor_cohomology.hpp"

#include <algorithm>

namespace quadcover {

SurfaceKind SurfaceKind::hirzebruch(int e) {
    if (e < 0) throw std::invalid_argument("Hirzebruch invariant must satisfy e >= 0, got e=" + std::to_string(e));
    return {Kind::Hirzebruch, e};
}

std::string SurfaceKind::name() const {
    return is_plane() ? "P2" : "F" + std::to_string(e);
}

namespace {

std::string term(int coeff, const char* sym, bool leading) {
    std::string out;
    if (coeff == 0) return out;
    if (coeff > 0 && !leading) out += "+";
    if (coeff == -1)
        out += "-";
    else if (coeff != 1)
        out += std::to_string(coeff);
    out += sym;
    return out;
}

}  // namespace

std::string DivisorClass::str() const {
    if (on_plane) {
        if (a == 0) return "O";
        return term(a, "L", true);
    }
    if (a == 0 && b == 0) return "O";
    std::string out = term(a, "C0", true);
    out += term(b, "f", out.empty());
    return out;
}

namespace {

void require_same_family(const DivisorClass& lhs, const DivisorClass& rhs) {
    if (lhs.on_plane != rhs.on_plane)
        throw std::invalid_argument("divisor classes live on different surface kinds");
}

}  // namespace

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_family(lhs, rhs);
    return {lhs.on_plane, lhs.a + rhs.a, lhs.b + rhs.b};
}

DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_family(lhs, rhs);
    return {lhs.on_plane, lhs.a - rhs.a, lhs.b - rhs.b};
}

DivisorClass operator-(const DivisorClass& d) { return {d.on_plane, -d.a, -d.b}; }

DivisorClass operator*(int k, const DivisorClass& d) { return {d.on_plane, k * d.a, k * d.b}; }

void require_on(const DivisorClass& d, const SurfaceKind& s) {
    if (d.on_plane != s.is_plane())
        throw std::invalid_argument("divisor class " + d.str() + " does not live on " + s.name());
}

long long intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceKind& s) {
    require_on(d1, s);
    require_on(d2, s);
    if (s.is_plane()) return static_cast<long long>(d1.a) * d2.a;
    // (a1*C0 + b1*f).(a2*C0 + b2*f) with C0^2 = -e, C0.f = 1, f^2 = 0
    return -static_cast<long long>(s.e) * d1.a * d2.a + static_cast<long long>(d1.a) * d2.b +
           static_cast<long long>(d1.b) * d2.a;
}

DivisorClass canonical_class(const SurfaceKind& s) {
    if (s.is_plane()) return DivisorClass::plane(-3);
    return DivisorClass::ruled(-2, -(s.e + 2));
}

long long euler_char(const DivisorClass& d, const SurfaceKind& s) {
    require_on(d, s);
    if (s.is_plane()) {
        long long dd = d.a;
        return (dd + 1) * (dd + 2) / 2;
    }
    long long a = d.a, b = d.b;
    return (a + 1) * (b + 1) - s.e * a * (a + 1) / 2;
}

long long h0(const DivisorClass& d, const SurfaceKind& s) {
    require_on(d, s);
    if (s.is_plane()) {
        if (d.a < 0) return 0;
        long long dd = d.a;
        return (dd + 1) * (dd + 2) / 2;
    }
    if (d.a < 0) return 0;
    long long total = 0;
    for (int i = 0; i <= d.a; ++i) total += std::max(0, d.b - i * s.e + 1);
    return total;
}

long long oracle_h0(const DivisorClass& d, const SurfaceKind& s) {
    require_on(d, s);
    long long count = 0;
    if (s.is_plane()) {
        for (int i = 0; i <= d.a; ++i)
            for (int j = 0; i + j <= d.a; ++j) ++count;  // k = d - i - j >= 0
        return count;
    }
    if (d.a < 0) return 0;
    for (int delta = 0; delta <= d.a; ++delta) {
        int rest = d.b - s.e * delta;  // alpha + beta = rest
        for (int alpha = 0; alpha <= rest; ++alpha) ++count;
    }
    return count;
}

CohomologySummary cohomology(const DivisorClass& d, const SurfaceKind& s) {
    CohomologySummary out;
    out.h0 = h0(d, s);
    out.h2 = h0(canonical_class(s) - d, s);
    out.chi = euler_char(d, s);
    out.h1 = out.h0 + out.h2 - out.chi;
    return out;
}

}  // namespace quadcover
