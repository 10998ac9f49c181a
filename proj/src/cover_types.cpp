#include "quadcover/cover_types.hpp"

#include <numeric>
#include <set>

namespace quadcover {

std::string to_string(GaloisGroup g) { return g == GaloisGroup::Z4 ? "Z4" : "Z2xZ2"; }

int compose_characters(GaloisGroup g, int c1, int c2) {
    return g == GaloisGroup::Z4 ? (c1 + c2) & 3 : c1 ^ c2;
}

std::vector<int> subgroup_elements(GaloisGroup g, const std::vector<int>& generators) {
    std::set<int> closure = {0};
    closure.insert(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> snapshot(closure.begin(), closure.end());
        for (int c1 : snapshot)
            for (int c2 : snapshot)
                if (closure.insert(compose_characters(g, c1, c2)).second) grew = true;
    }
    return {closure.begin(), closure.end()};
}

int subgroup_order(GaloisGroup g, const std::vector<int>& generators) {
    return static_cast<int>(subgroup_elements(g, generators).size());
}

std::string character_label(GaloisGroup g, int c) {
    if (g == GaloisGroup::Z4) return std::to_string(c);
    return "(" + std::to_string(c & 1) + "," + std::to_string((c >> 1) & 1) + ")";
}

std::string to_string(TypeId t) {
    switch (t) {
        case TypeId::T1: return "1";
        case TypeId::T2: return "2";
        case TypeId::T3: return "3";
        case TypeId::T4: return "4";
        case TypeId::T5_1: return "5.1";
        case TypeId::T5_2: return "5.2";
        case TypeId::T6_1: return "6.1";
        case TypeId::T6_2: return "6.2";
        case TypeId::T7: return "7";
        case TypeId::T8_1: return "8.1";
        case TypeId::T8_2: return "8.2";
        case TypeId::T9: return "9";
        case TypeId::T10: return "10";
        case TypeId::T11: return "11";
        case TypeId::T12: return "12";
    }
    return "?";
}

std::optional<TypeId> parse_type_id(const std::string& s) {
    for (TypeId t : all_type_ids)
        if (to_string(t) == s) return t;
    return std::nullopt;
}

bool is_singular_base(TypeId t) {
    return t == TypeId::T9 || t == TypeId::T10 || t == TypeId::T11 || t == TypeId::T12;
}

bool has_m_parameter(TypeId t) {
    switch (t) {
        case TypeId::T3:
        case TypeId::T4:
        case TypeId::T5_2:
        case TypeId::T6_2:
        case TypeId::T7:
        case TypeId::T8_2: return true;
        default: return false;
    }
}

bool has_e_parameter(TypeId t) { return t == TypeId::T3 || t == TypeId::T4; }

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational lhs, Rational rhs) {
    return Rational(lhs.num * rhs.den + rhs.num * lhs.den, lhs.den * rhs.den);
}

Rational operator*(Rational lhs, Rational rhs) {
    return Rational(lhs.num * rhs.num, lhs.den * rhs.den);
}

namespace {

[[noreturn]] void constraint_error(TypeId t, const std::string& what) {
    throw std::invalid_argument("Type " + to_string(t) + " " + what);
}

// Resolves the (m, e) parameters of a type, enforcing the classification
// constraints.  Types with a forced parameter accept the forced value only.
void resolve_parameters(TypeId t, std::optional<int> m_opt, std::optional<int> e_opt, int& m,
                        int& e) {
    const bool takes_m = has_m_parameter(t);
    const bool forced_m1 = t == TypeId::T5_1 || t == TypeId::T6_1 || t == TypeId::T8_1;

    if (!takes_m && !forced_m1) {
        if (m_opt && *m_opt != 0) constraint_error(t, "takes no m parameter");
        if (e_opt && *e_opt != 0) constraint_error(t, "takes no e parameter");
        m = 0;
        e = 0;
        return;
    }
    if (forced_m1) {
        m = m_opt.value_or(1);
        if (m != 1) constraint_error(t, "requires m = 1 (got m=" + std::to_string(m) + ")");
        e = e_opt.value_or(0);
        if (e != 0) constraint_error(t, "requires e = 0 (got e=" + std::to_string(e) + ")");
        return;
    }
    if (!m_opt) constraint_error(t, "requires a value of m");
    m = *m_opt;
    if (has_e_parameter(t)) {
        e = e_opt.value_or(0);
        if (e < 0 || e > 2)
            constraint_error(t, "requires 0 <= e <= 2 (got e=" + std::to_string(e) + ")");
        if (m < e + 1)
            constraint_error(t, "requires m >= e+1 (got m=" + std::to_string(m) +
                                    ", e=" + std::to_string(e) + ")");
        return;
    }
    e = e_opt.value_or(0);
    if (e != 0) constraint_error(t, "requires e = 0 (got e=" + std::to_string(e) + ")");
    const int m_min = t == TypeId::T7 ? 1 : 2;
    if (m < m_min)
        constraint_error(t, "requires m >= " + std::to_string(m_min) +
                                " (got m=" + std::to_string(m) + ")");
}

ResolutionData resolution_data(TypeId t) {
    ResolutionData r;
    switch (t) {
        case TypeId::T9:
            // p*C0 = 2F, F^2 = -2; the single point over the vertex is an
            // A1 singularity resolved crepantly by one blow-up.
            r = {true, 1, {{2, Rational(-2), 0, 2}}};
            break;
        case TypeId::T10:
            // p*C0 = 4F, F^2 = -1/2; crepant partial resolution of a D4 point.
            r = {true, 1, {{4, Rational(-1, 2), 0, 1}}};
            break;
        case TypeId::T11:
            // Two smooth points over the vertex, blown up into (-1)-lines
            // F1, F2 with p*C0 = 2F1 + 2F2 and K correction F1 + F2.
            r = {false, 2, {{2, Rational(-1), 1, 1}, {2, Rational(-1), 1, 1}}};
            break;
        case TypeId::T12:
            // p*C0 = 4F, F^2 = -1/2; K correction 2F.
            r = {false, 1, {{4, Rational(-1, 2), 2, 1}}};
            break;
        default: break;
    }
    return r;
}

}  // namespace

CoverDescriptor make_cover(TypeId t, std::optional<int> m_opt, std::optional<int> e_opt) {
    CoverDescriptor c;
    c.type = t;
    resolve_parameters(t, m_opt, e_opt, c.m, c.e);

    auto ruled = [](int a, int b) { return DivisorClass::ruled(a, b); };
    const int m = c.m, e = c.e;

    switch (t) {
        case TypeId::T1:
            c.group = GaloisGroup::Z4;
            c.surface = SurfaceKind::plane();
            c.hyperplane = DivisorClass::plane(1);
            c.branch1 = DivisorClass::plane(2);  // conic
            c.branch2 = DivisorClass::plane(4);  // quartic
            c.base_name = "P2";
            break;
        case TypeId::T2:
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::plane();
            c.hyperplane = DivisorClass::plane(1);
            c.branch1 = DivisorClass::plane(4);
            c.branch2 = DivisorClass::plane(4);
            c.base_name = "P2";
            break;
        case TypeId::T3:
            c.group = GaloisGroup::Z4;
            c.surface = SurfaceKind::hirzebruch(e);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(0, 2 * m - e + 1);
            c.branch2 = ruled(4, 2 * e + 2);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m - e) + ")";
            break;
        case TypeId::T4:
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::hirzebruch(e);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(2, 2 * m + 2);
            c.branch2 = ruled(4, 2 * e + 2);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m - e) + ")";
            break;
        case TypeId::T5_1:
        case TypeId::T5_2:
            c.group = GaloisGroup::Z4;
            c.surface = SurfaceKind::hirzebruch(0);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(0, 2 * m + 4);
            c.branch2 = ruled(4, 0);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m) + ")";
            break;
        case TypeId::T6_1:
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::hirzebruch(0);
            c.hyperplane = ruled(1, 1);
            c.branch1 = ruled(4, 0);
            c.branch2 = ruled(2, 6);
            c.base_name = "S(1,1)";
            break;
        case TypeId::T6_2:
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::hirzebruch(0);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(2, 2 * m + 4);
            c.branch2 = ruled(4, 0);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m) + ")";
            break;
        case TypeId::T7:
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::hirzebruch(0);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(0, 2 * m + 2);
            c.branch2 = ruled(6, 2);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m) + ")";
            break;
        case TypeId::T8_1:
        case TypeId::T8_2:
            // One branch-data family, generic in m; 8.1 is the m = 1 member
            // (the product of two genus-2 curves) and every section-level
            // computation below treats both uniformly.
            c.group = GaloisGroup::Z2xZ2;
            c.surface = SurfaceKind::hirzebruch(0);
            c.hyperplane = ruled(1, m);
            c.branch1 = ruled(0, 2 * m + 4);
            c.branch2 = ruled(6, 0);
            c.base_name = "S(" + std::to_string(m) + "," + std::to_string(m) + ")";
            break;
        case TypeId::T9:
        case TypeId::T10:
        case TypeId::T11:
        case TypeId::T12:
            c.group = (t == TypeId::T10 || t == TypeId::T12) ? GaloisGroup::Z4
                                                             : GaloisGroup::Z2xZ2;
            c.singular_base = true;
            c.surface = SurfaceKind::hirzebruch(2);
            c.hyperplane = ruled(1, 2);  // pullback of the hyperplane class to Y
            c.resolution = resolution_data(t);
            c.base_name = "S(0,2)";
            break;
    }
    return c;
}

namespace {

// Divides a class given in quarter units by 4, checking integrality.
DivisorClass quarters_to_class(TypeId t, const DivisorClass& quarters) {
    if (quarters.a % 4 != 0 || quarters.b % 4 != 0)
        throw std::logic_error("non-integral splitting summand for Type " + to_string(t));
    return {quarters.on_plane, quarters.a / 4, quarters.b / 4};
}

}  // namespace

SheafSplitting splitting(const CoverDescriptor& c) {
    if (c.singular_base)
        throw std::invalid_argument("Type " + to_string(c.type) +
                                    " has a singular base; use y_splitting");
    DivisorClass l1q, l2q;  // L1*, L2* in quarter units
    if (c.group == GaloisGroup::Z4) {
        l1q = -(2 * c.branch1 + c.branch2);
        l2q = -2 * c.branch2;
    } else {
        l1q = -2 * c.branch2;
        l2q = -2 * c.branch1;
    }
    DivisorClass l1 = quarters_to_class(c.type, l1q);
    DivisorClass l2 = quarters_to_class(c.type, l2q);
    DivisorClass zero = c.surface.is_plane() ? DivisorClass::plane(0) : DivisorClass::ruled(0, 0);
    return {c.group, c.surface, {zero, l1, l2, l1 + l2}};
}

SheafSplitting y_splitting(const CoverDescriptor& c) {
    if (!c.singular_base)
        throw std::invalid_argument("y_splitting applies to Types 9-12 only, not Type " +
                                    to_string(c.type));
    auto ruled = [](int a, int b) { return DivisorClass::ruled(a, b); };
    SheafSplitting s{c.group, c.surface, {}};
    if (c.type == TypeId::T9 || c.type == TypeId::T10)
        s.summands = {ruled(0, 0), ruled(-1, -3), ruled(-2, -3), ruled(-3, -6)};
    else
        s.summands = {ruled(0, 0), ruled(-2, -3), ruled(-2, -3), ruled(-3, -6)};
    return s;
}

SurfaceInvariants invariants(const CoverDescriptor& c) {
    const SheafSplitting s = c.singular_base ? y_splitting(c) : splitting(c);
    SurfaceInvariants inv;
    for (const DivisorClass& l : s.summands) {
        inv.p_g += h0(c.hyperplane + l, c.surface);
        inv.q += cohomology(l, c.surface).h1;
    }
    inv.K2 = 4 * intersect(c.hyperplane, c.hyperplane, c.surface);
    inv.chi = 1 - inv.q + inv.p_g;
    return inv;
}

SurfaceInvariants expected_invariants(TypeId t, int m, int e) {
    SurfaceInvariants inv;
    switch (t) {
        case TypeId::T1:
        case TypeId::T2:
            inv.p_g = 3;
            inv.q = 0;
            inv.K2 = 4;
            break;
        case TypeId::T3:
        case TypeId::T4:
            inv.p_g = 2 * m - e + 2;
            inv.q = 0;
            inv.K2 = 4 * (2 * m - e);
            break;
        case TypeId::T5_1:
        case TypeId::T5_2:
        case TypeId::T6_1:
        case TypeId::T6_2:
            inv.p_g = 2 * m + 2;
            inv.q = 1;
            inv.K2 = 8 * m;
            break;
        case TypeId::T7:
            inv.p_g = 2 * m + 2;
            inv.q = m;
            inv.K2 = 8 * m;
            break;
        case TypeId::T8_1:
        case TypeId::T8_2:
            inv.p_g = 2 * m + 2;
            inv.q = m + 3;
            inv.K2 = 8 * m;
            break;
        case TypeId::T9:
        case TypeId::T10:
        case TypeId::T11:
        case TypeId::T12:
            inv.p_g = 4;
            inv.q = 0;
            inv.K2 = 8;
            break;
    }
    inv.chi = 1 - inv.q + inv.p_g;
    return inv;
}

SurfaceInvariants product_invariants(int g1, int g2) {
    if (g1 < 0 || g2 < 0) throw std::invalid_argument("curve genera must be nonnegative");
    SurfaceInvariants inv;
    inv.p_g = static_cast<long long>(g1) * g2;
    inv.q = g1 + g2;
    inv.K2 = 8LL * (g1 - 1) * (g2 - 1);
    inv.chi = 1 - inv.q + inv.p_g;
    return inv;
}

std::vector<CoverDescriptor> all_covers(int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    std::vector<CoverDescriptor> out;
    for (TypeId t : all_type_ids) {
        if (!has_m_parameter(t)) {
            out.push_back(make_cover(t));
            continue;
        }
        if (has_e_parameter(t)) {
            for (int e = 0; e <= 2; ++e)
                for (int m = e + 1; m <= m_max; ++m) out.push_back(make_cover(t, m, e));
            continue;
        }
        const int m_min = t == TypeId::T7 ? 1 : 2;
        for (int m = m_min; m <= m_max; ++m) out.push_back(make_cover(t, m));
    }
    return out;
}

}  // namespace quadcover
