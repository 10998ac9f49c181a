#include "quadcover/section_ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace quadcover {

MonomialBasis monomial_basis(const DivisorClass& d, const SurfaceKind& s) {
    require_on(d, s);
    MonomialBasis basis{d, s, {}};
    if (s.is_plane()) {
        for (int i = 0; i <= d.a; ++i)
            for (int j = 0; i + j <= d.a; ++j)
                basis.exponents.push_back({i, j, d.a - i - j, 0});
        return basis;
    }
    if (d.a < 0) return basis;
    for (int delta = 0; delta <= d.a; ++delta) {
        int rest = d.b - s.e * delta;
        for (int alpha = 0; alpha <= rest; ++alpha)
            basis.exponents.push_back({alpha, rest - alpha, d.a - delta, delta});
    }
    return basis;
}

SumsetAccumulator::SumsetAccumulator(const DivisorClass& target, const SurfaceKind& s)
    : surface_(s), target_(target) {
    require_on(target, s);
    dim_target_ = h0(target, s);
    if (dim_target_ == 0) return;
    // Grid over the free exponents: (i, j) on the plane, (delta, alpha) on
    // F_e; the remaining exponents are determined by the target class.
    stride_ = target.b >= 0 ? target.b + 1 : 0;
    if (s.is_plane()) stride_ = target.a + 1;
    hit_.assign(static_cast<std::size_t>(target.a + 1) * stride_, 0);
}

void SumsetAccumulator::add_products(const MonomialBasis& b1, const MonomialBasis& b2) {
    if (dim_target_ == 0) return;
    if (!(b1.divisor + b2.divisor == target_))
        throw std::logic_error("product class " + (b1.divisor + b2.divisor).str() +
                               " does not match accumulator target " + target_.str());
    const bool plane = surface_.is_plane();
    for (const Monomial& m1 : b1.exponents) {
        for (const Monomial& m2 : b2.exponents) {
            std::size_t idx;
            if (plane)
                idx = static_cast<std::size_t>(m1[0] + m2[0]) * stride_ + (m1[1] + m2[1]);
            else
                idx = static_cast<std::size_t>(m1[3] + m2[3]) * stride_ + (m1[0] + m2[0]);
            if (!hit_[idx]) {
                hit_[idx] = 1;
                ++rank_;
            }
        }
    }
}

MultMapReport mult_map(const DivisorClass& d1, const DivisorClass& d2, const SurfaceKind& s) {
    MonomialBasis b1 = monomial_basis(d1, s);
    MonomialBasis b2 = monomial_basis(d2, s);
    SumsetAccumulator acc(d1 + d2, s);
    acc.add_products(b1, b2);
    MultMapReport report;
    report.dim_source1 = b1.dim();
    report.dim_source2 = b2.dim();
    report.dim_target = acc.dim_target();
    report.rank = acc.rank();
    report.coker_dim = report.dim_target - report.rank;
    report.surjective = report.coker_dim == 0;
    return report;
}

namespace {

bool standing_hypotheses(const DivisorClass& l, int e) { return l.a >= 0 && l.b >= l.a * e; }

bool cond_a(int a1, int b1, int a2, int b2, int e) {
    if (a1 < 1 || b1 <= a1 * e) return false;
    if (a2 % a1 != 0) return false;
    int n = a2 / a1;
    return n >= 1 && b2 == n * b1;
}

bool cond_b(int a1, int b1, int a2, int b2, int e) {
    if (a1 < 1) return false;
    int bound = e >= 1 ? 2 * a1 - 2 + e : 2 * a1 - 1;
    return a2 >= bound && b2 - b1 >= (a2 - a1) * e - 1;
}

bool cond_c(int a1, int /*b1*/, int a2, int /*b2*/, int /*e*/) { return a1 > 0 && a2 == 0; }

bool cond_d(int a1, int b1, int a2, int b2, int /*e*/) {
    return a1 == 1 && a2 == 1 && b2 >= b1 - 1;
}

}  // namespace

char condition_letter(HirzebruchCondition c) {
    switch (c) {
        case HirzebruchCondition::A: return 'a';
        case HirzebruchCondition::B: return 'b';
        case HirzebruchCondition::C: return 'c';
        case HirzebruchCondition::D: return 'd';
        case HirzebruchCondition::E: return 'e';
    }
    return '?';
}

std::optional<HirzebruchCondition> surjonhirz_condition(const DivisorClass& l1,
                                                        const DivisorClass& l2, int e) {
    if (l1.on_plane || l2.on_plane)
        throw std::invalid_argument("surjonhirz_condition expects classes on a Hirzebruch surface");
    if (e < 0 || e > 2) return std::nullopt;
    if (!standing_hypotheses(l1, e) || !standing_hypotheses(l2, e)) return std::nullopt;

    // The multiplication map is symmetric, so each condition may be met with
    // the factors in either order.
    auto both = [&](bool (*cond)(int, int, int, int, int)) {
        return cond(l1.a, l1.b, l2.a, l2.b, e) || cond(l2.a, l2.b, l1.a, l1.b, e);
    };
    if (both(cond_a)) return HirzebruchCondition::A;
    if (both(cond_b)) return HirzebruchCondition::B;
    if (both(cond_c)) return HirzebruchCondition::C;
    if (both(cond_d)) return HirzebruchCondition::D;
    if (e == 0) return HirzebruchCondition::E;
    return std::nullopt;
}

bool chain_surjective(const DivisorClass& e, const std::vector<DivisorClass>& factors,
                      const SurfaceKind& s) {
    if (factors.empty()) throw std::invalid_argument("chain_surjective requires at least one factor");
    DivisorClass running = e;
    for (const DivisorClass& f : factors) {
        if (!mult_map(running, f, s).surjective) return false;
        running = running + f;
    }
    return true;
}

namespace {

using boost::multiprecision::cpp_int;

// Fraction-free (Bareiss) elimination; handles rank-deficient columns.
long long exact_rank(std::vector<std::vector<cpp_int>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    cpp_int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

}  // namespace

long long mult_map_dense_rank(const DivisorClass& d1, const DivisorClass& d2,
                              const SurfaceKind& s) {
    MonomialBasis b1 = monomial_basis(d1, s);
    MonomialBasis b2 = monomial_basis(d2, s);
    MonomialBasis target = monomial_basis(d1 + d2, s);
    if (b1.dim() == 0 || b2.dim() == 0 || target.dim() == 0) return 0;

    // Row index of each target monomial.
    auto row_of = [&](const Monomial& mono) {
        auto it = std::find(target.exponents.begin(), target.exponents.end(), mono);
        if (it == target.exponents.end())
            throw std::logic_error("product monomial missing from target basis");
        return static_cast<std::size_t>(it - target.exponents.begin());
    };

    // One row per source pair, one column per target monomial; rank is
    // computed by honest elimination rather than by counting distinct sums.
    std::vector<std::vector<cpp_int>> matrix;
    matrix.reserve(static_cast<std::size_t>(b1.dim()) * b2.dim());
    for (const Monomial& m1 : b1.exponents) {
        for (const Monomial& m2 : b2.exponents) {
            Monomial prod = {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
            std::vector<cpp_int> row(target.exponents.size(), 0);
            row[row_of(prod)] = 1;
            matrix.push_back(std::move(row));
        }
    }
    return exact_rank(std::move(matrix));
}

}  // namespace quadcover
