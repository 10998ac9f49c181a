#include "quadcover/bicanonical.hpp"

#include <algorithm>

namespace quadcover {

long long PushedSections::total() const {
    long long sum = 0;
    for (const PushedSummand& p : entries) sum += p.h0;
    return sum;
}

namespace {

void require_smooth(const CoverDescriptor& c, const char* op) {
    if (c.singular_base)
        throw std::invalid_argument(std::string(op) + " applies to smooth-base types only, not Type " +
                                    to_string(c.type));
}

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Summand multiplication routes that are isomorphisms of line bundles:
// O (x) Lk -> Lk (module structure) and L1 (x) L2 -> L3.  Products such as
// L1 (x) L1 multiply by branch sections and are not counted.
std::vector<std::pair<int, int>> routes_into(int k) {
    if (k == 0) return {{0, 0}};
    std::vector<std::pair<int, int>> r = {{0, k}, {k, 0}};
    if (k == 3) {
        r.push_back({1, 2});
        r.push_back({2, 1});
    }
    return r;
}

SplitMapReport coverage_of(const SheafSplitting& split, const DivisorClass& a1,
                           const DivisorClass& a2) {
    SplitMapReport report;
    report.surjective = true;
    for (int k = 0; k < 4; ++k) {
        DivisorClass target = a1 + a2 + split.summands[k];
        SumsetAccumulator acc(target, split.surface);
        for (auto [i, j] : routes_into(k)) {
            MonomialBasis b1 = monomial_basis(a1 + split.summands[i], split.surface);
            MonomialBasis b2 = monomial_basis(a2 + split.summands[j], split.surface);
            acc.add_products(b1, b2);
        }
        SummandCoverage cov{k, target, acc.dim_target(), acc.rank(),
                            acc.rank() == acc.dim_target()};
        report.coker_dim += cov.dim_target - cov.rank;
        report.surjective = report.surjective && cov.covered;
        report.summands.push_back(cov);
    }
    return report;
}

}  // namespace

PushedSections pushed_sections(const CoverDescriptor& c, int n) {
    require_smooth(c, "pushed_sections");
    require_positive(n, "n");
    const SheafSplitting split = splitting(c);
    PushedSections out;
    out.n = n;
    for (int i = 0; i < 4; ++i) {
        DivisorClass d = n * c.hyperplane + split.summands[i];
        out.entries.push_back({i, d, h0(d, c.surface)});
    }
    return out;
}

long long canonical_h0(const CoverDescriptor& c, int n) {
    require_positive(n, "n");
    const SheafSplitting split = c.singular_base ? y_splitting(c) : splitting(c);
    long long sum = 0;
    for (const DivisorClass& l : split.summands) sum += h0(n * c.hyperplane + l, c.surface);
    return sum;
}

SplitMapReport pushed_mult_map(const CoverDescriptor& c, int n1, int n2) {
    require_smooth(c, "pushed_mult_map");
    require_positive(n1, "n1");
    require_positive(n2, "n2");
    return coverage_of(splitting(c), n1 * c.hyperplane, n2 * c.hyperplane);
}

SplitMapReport beta_surjective(const CoverDescriptor& c) { return pushed_mult_map(c, 2, 2); }

NormalGenerationVerdict normal_generation(const CoverDescriptor& c, int n_max) {
    require_smooth(c, "normal_generation");
    require_positive(n_max, "n_max");
    NormalGenerationVerdict verdict;
    for (int n = 1; n <= n_max; ++n) {
        SplitMapReport step = pushed_mult_map(c, 2, 2 * n);
        ++verdict.steps_checked;
        if (!step.surjective) {
            verdict.first_failing_n = n;
            verdict.first_failure = std::move(step);
            return verdict;
        }
    }
    verdict.normally_generated = true;
    return verdict;
}

namespace {

std::string image_description(const CoverDescriptor& c) {
    const std::string m = std::to_string(c.m);
    const std::string deg = std::to_string(4 * c.m);
    switch (c.type) {
        case TypeId::T5_1:
        case TypeId::T6_1:
            return "conic x projectively normal elliptic curve of degree 4";
        case TypeId::T7:
            return "conic x projectively normal curve of genus " + m + ", degree " + deg;
        case TypeId::T8_1: return "F0 re-embedded by |2C0+2f|";
        case TypeId::T8_2:
            return "projectively normal curve of genus " + std::to_string(c.m + 1) + ", degree " +
                   deg + " x conic";
        case TypeId::T9:
        case TypeId::T10:
        case TypeId::T12:
            return "birational image; directions at the point over the vertex not separated";
        case TypeId::T11:
            return "birational image; the two points over the vertex are identified "
                   "(local embedding at each)";
        default: return "X embedded by |2K| as a projectively normal surface";
    }
}

}  // namespace

BicanonicalReport factor_degree(const CoverDescriptor& c) {
    BicanonicalReport report;
    report.image_descriptor = image_description(c);
    if (c.singular_base) {
        report.degree = 1;
        report.birational = true;
        report.embedding = false;
        report.obstruction_h1 = singular_obstruction(c);
        return report;
    }
    std::vector<int> chars_with_sections;
    for (const PushedSummand& p : pushed_sections(c, 2).entries)
        if (p.h0 > 0) chars_with_sections.push_back(p.character);
    report.degree = 4 / subgroup_order(c.group, chars_with_sections);
    if (report.degree == 1) {
        report.birational = true;
        report.embedding = normal_generation(c, 5).normally_generated;
    }
    return report;
}

std::optional<int> genus2_pencil(const CoverDescriptor& c) {
    std::optional<int> genus;
    switch (c.type) {
        case TypeId::T5_1:
        case TypeId::T6_1: genus = 1; break;
        case TypeId::T7: genus = c.m; break;
        case TypeId::T8_1:
        case TypeId::T8_2: genus = c.m + 1; break;
        default: return std::nullopt;
    }
    if (invariants(c).q < *genus)
        throw std::logic_error("genus-2 pencil base genus exceeds q for Type " + to_string(c.type));
    return genus;
}

ImageNormalityReport image_projectively_normal(const CoverDescriptor& c, int r_bound) {
    switch (c.type) {
        case TypeId::T5_1:
        case TypeId::T6_1:
        case TypeId::T7:
        case TypeId::T8_1:
        case TypeId::T8_2: break;
        default:
            throw std::invalid_argument("image_projectively_normal applies to the non-embedding "
                                        "smooth-base types only, not Type " +
                                        to_string(c.type));
    }
    require_positive(r_bound, "r_bound");

    // phi_2 factors through the intermediate cover whose algebra consists of
    // the summands with characters in the subgroup generated by those with
    // sections in 2H; its polarization is the restriction of 2H.
    const SheafSplitting split = splitting(c);
    std::vector<int> with_sections;
    for (const PushedSummand& p : pushed_sections(c, 2).entries)
        if (p.h0 > 0) with_sections.push_back(p.character);
    const std::vector<int> algebra = subgroup_elements(c.group, with_sections);

    ImageNormalityReport report;
    report.r_bound = r_bound;
    report.projectively_normal = true;
    const DivisorClass two_h = 2 * c.hyperplane;
    for (int r = 1; r <= r_bound; ++r) {
        SplitMapReport map_report;
        map_report.surjective = true;
        for (int k : algebra) {
            DivisorClass target = (2 * r + 2) * c.hyperplane + split.summands[k];
            SumsetAccumulator acc(target, c.surface);
            for (int i : algebra) {
                for (int j : algebra) {
                    if (i != 0 && j != 0) continue;  // only module-structure routes
                    if (compose_characters(c.group, i, j) != k) continue;
                    acc.add_products(monomial_basis(two_h + split.summands[i], c.surface),
                                     monomial_basis(2 * r * c.hyperplane + split.summands[j],
                                                    c.surface));
                }
            }
            SummandCoverage cov{k, target, acc.dim_target(), acc.rank(),
                                acc.rank() == acc.dim_target()};
            map_report.coker_dim += cov.dim_target - cov.rank;
            map_report.surjective = map_report.surjective && cov.covered;
            map_report.summands.push_back(cov);
        }
        report.projectively_normal = report.projectively_normal && map_report.surjective;
        report.maps.push_back(std::move(map_report));
    }
    return report;
}

std::vector<long long> h1_pullback_terms(const SheafSplitting& split, const DivisorClass& d) {
    std::vector<long long> terms;
    for (const DivisorClass& l : split.summands)
        terms.push_back(cohomology(d + l, split.surface).h1);
    return terms;
}

long long h1_pullback(const SheafSplitting& split, const DivisorClass& d) {
    long long sum = 0;
    for (long long t : h1_pullback_terms(split, d)) sum += t;
    return sum;
}

std::vector<long long> singular_obstruction_terms(const CoverDescriptor& c) {
    if (!c.singular_base)
        throw std::invalid_argument("singular_obstruction applies to Types 9-12 only, not Type " +
                                    to_string(c.type));
    // Type 12 reduces the obstruction to h^1 of the pullback of -2f; the
    // others reduce it to h^1 of the pullback of C0 + 4f (= 2H_Y - C0).
    const DivisorClass d =
        c.type == TypeId::T12 ? DivisorClass::ruled(0, -2) : DivisorClass::ruled(1, 4);
    return h1_pullback_terms(y_splitting(c), d);
}

long long singular_obstruction(const CoverDescriptor& c) {
    long long sum = 0;
    for (long long t : singular_obstruction_terms(c)) sum += t;
    return sum;
}

}  // namespace quadcover
