#include "quadcover/canonical_ring.hpp"

namespace quadcover {

long long deg2_extra_generators(int n, long long p_g, long long q) {
    if (n < 2) throw std::invalid_argument("cover degree must be >= 2");
    if (q < 0) throw std::invalid_argument("irregularity must be >= 0");
    return (n - 2) * (p_g - 2) - q;
}

GammaReport gamma_coker(const CoverDescriptor& c, int n) {
    if (c.singular_base)
        throw std::invalid_argument("gamma_coker applies to smooth-base types only, not Type " +
                                    to_string(c.type));
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const SheafSplitting split = splitting(c);
    const MonomialBasis degree_one = monomial_basis(c.hyperplane, c.surface);
    GammaReport report;
    report.n = n;
    for (int k = 0; k < 4; ++k) {
        DivisorClass target = (n + 1) * c.hyperplane + split.summands[k];
        SumsetAccumulator acc(target, c.surface);
        acc.add_products(degree_one, monomial_basis(n * c.hyperplane + split.summands[k], c.surface));
        long long coker = acc.dim_target() - acc.rank();
        report.coker_dim += coker;
        report.per_summand.push_back({k, target, coker});
    }
    return report;
}

GammaReport new_generator_count(const CoverDescriptor& c, int n) {
    if (c.singular_base)
        throw std::invalid_argument("new_generator_count applies to smooth-base types only, not Type " +
                                    to_string(c.type));
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const SheafSplitting split = splitting(c);
    GammaReport report;
    report.n = n;
    for (int k = 0; k < 4; ++k) {
        DivisorClass target = (n + 1) * c.hyperplane + split.summands[k];
        SumsetAccumulator acc(target, c.surface);
        for (int i = 1; i <= n; ++i) {
            const int j = n + 1 - i;
            for (int c1 = 0; c1 < 4; ++c1) {
                for (int c2 = 0; c2 < 4; ++c2) {
                    if (compose_characters(c.group, c1, c2) != k) continue;
                    // Only summand products that are isomorphisms.
                    const bool module_route = c1 == 0 || c2 == 0;
                    const bool branch_route = (c1 == 1 && c2 == 2) || (c1 == 2 && c2 == 1);
                    if (!module_route && !branch_route) continue;
                    acc.add_products(monomial_basis(i * c.hyperplane + split.summands[c1], c.surface),
                                     monomial_basis(j * c.hyperplane + split.summands[c2], c.surface));
                }
            }
        }
        long long coker = acc.dim_target() - acc.rank();
        report.coker_dim += coker;
        report.per_summand.push_back({k, target, coker});
    }
    return report;
}

long long delta(const CoverDescriptor& c) {
    switch (c.type) {
        case TypeId::T5_1:
        case TypeId::T6_1: return 4;
        case TypeId::T7: return 5LL * c.m - 1;
        case TypeId::T8_1: return 9;
        case TypeId::T8_2: return 5LL * c.m;
        default: return invariants(c).p_g - 3;
    }
}

GeneratorProfile generator_profile(const CoverDescriptor& c) {
    const SurfaceInvariants inv = invariants(c);
    GeneratorProfile profile;
    profile.deg1 = inv.p_g;
    profile.deg2_extra = 2 * inv.p_g - 4 - inv.q;
    profile.deg3_extra = delta(c);
    profile.generated_in_degree = profile.deg3_extra > 0 ? 3 : 2;
    if (!c.singular_base) profile.per_summand_coker = gamma_coker(c, 2).per_summand;
    return profile;
}

}  // namespace quadcover
