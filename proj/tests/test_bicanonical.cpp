#include <doctest.h>

#include <algorithm>

#include "quadcover/bicanonical.hpp"

using namespace quadcover;

namespace {
DivisorClass ruled(int a, int b) { return DivisorClass::ruled(a, b); }

std::vector<long long> h0_list(const PushedSections& p) {
    std::vector<long long> out;
    for (const PushedSummand& s : p.entries) out.push_back(s.h0);
    return out;
}
}  // namespace

TEST_CASE("pushed sections") {
    SUBCASE("plane cover in degree 2") {
        const PushedSections p = pushed_sections(make_cover(TypeId::T1), 2);
        CHECK(h0_list(p) == std::vector<long long>{6, 1, 1, 0});
        CHECK(p.total() == 8);
    }
    SUBCASE("degree 2 summands with sections") {
        for (int m = 1; m <= 6; ++m) {
            const CoverDescriptor c = make_cover(TypeId::T7, m);
            std::vector<DivisorClass> nonzero;
            for (const PushedSummand& s : pushed_sections(c, 2).entries)
                if (s.h0 > 0) nonzero.push_back(s.divisor);
            std::sort(nonzero.begin(), nonzero.end(),
                      [](const DivisorClass& x, const DivisorClass& y) {
                          return std::tie(x.a, x.b) < std::tie(y.a, y.b);
                      });
            CHECK(nonzero == std::vector<DivisorClass>{ruled(2, m - 1), ruled(2, 2 * m)});
        }
    }
    SUBCASE("degree 1 is pure p_g") {
        for (const CoverDescriptor& c : all_covers(6)) {
            if (c.singular_base) continue;
            const PushedSections p = pushed_sections(c, 1);
            CHECK(p.total() == invariants(c).p_g);
            for (const PushedSummand& s : p.entries)
                CHECK((s.character == 0 ? s.h0 == invariants(c).p_g : s.h0 == 0));
        }
    }
    SUBCASE("totals follow Riemann-Roch with vanishing") {
        for (const CoverDescriptor& c : all_covers(6)) {
            const SurfaceInvariants inv = invariants(c);
            for (int n = 2; n <= 5; ++n)
                CHECK(canonical_h0(c, n) == inv.chi + n * (n - 1) / 2 * inv.K2);
        }
    }
    CHECK_THROWS_AS(pushed_sections(make_cover(TypeId::T9), 2), std::invalid_argument);
    CHECK_THROWS_AS(pushed_sections(make_cover(TypeId::T1), 0), std::invalid_argument);
}

TEST_CASE("beta surjectivity") {
    SUBCASE("regular scroll covers surject") {
        for (int e = 0; e <= 2; ++e)
            for (int m = e + 1; m <= 6; ++m) {
                CHECK(beta_surjective(make_cover(TypeId::T3, m, e)).surjective);
                CHECK(beta_surjective(make_cover(TypeId::T4, m, e)).surjective);
            }
    }
    SUBCASE("irregular low types fail with a visible witness") {
        const SplitMapReport r = beta_surjective(make_cover(TypeId::T5_1));
        CHECK_FALSE(r.surjective);
        bool found = false;
        for (const SummandCoverage& cov : r.summands)
            if (!cov.covered && cov.target == ruled(3, 1)) {
                CHECK(cov.dim_target == 8);
                CHECK(cov.rank == 0);
                found = true;
            }
        CHECK(found);
    }
    SUBCASE("product type fails") {
        CHECK_FALSE(beta_surjective(make_cover(TypeId::T8_1)).surjective);
        for (int m = 2; m <= 6; ++m)
            CHECK_FALSE(beta_surjective(make_cover(TypeId::T8_2, m)).surjective);
    }
}

TEST_CASE("normal generation") {
    CHECK(normal_generation(make_cover(TypeId::T4, 3, 1), 4).normally_generated);
    CHECK(normal_generation(make_cover(TypeId::T6_2, 2), 4).normally_generated);
    CHECK(normal_generation(make_cover(TypeId::T1), 5).normally_generated);
    CHECK(normal_generation(make_cover(TypeId::T2), 5).normally_generated);
    for (int m = 2; m <= 6; ++m)
        CHECK(normal_generation(make_cover(TypeId::T5_2, m), 4).normally_generated);

    const NormalGenerationVerdict t7 = normal_generation(make_cover(TypeId::T7, 2), 4);
    CHECK_FALSE(t7.normally_generated);
    CHECK(t7.first_failing_n == 1);  // beta itself
    CHECK(t7.first_failure.coker_dim > 0);
}

TEST_CASE("bicanonical degree and behavior") {
    const BicanonicalReport t81 = factor_degree(make_cover(TypeId::T8_1));
    CHECK(t81.degree == 4);
    CHECK_FALSE(t81.birational);
    CHECK(t81.image_descriptor == "F0 re-embedded by |2C0+2f|");

    for (int m = 1; m <= 6; ++m) {
        const BicanonicalReport t7 = factor_degree(make_cover(TypeId::T7, m));
        CHECK(t7.degree == 2);
        CHECK_FALSE(t7.embedding);
        CHECK(t7.image_descriptor.find("conic") != std::string::npos);
    }

    const BicanonicalReport t11 = factor_degree(make_cover(TypeId::T11));
    CHECK(t11.degree == 1);
    CHECK(t11.birational);
    CHECK_FALSE(t11.embedding);
    CHECK(t11.obstruction_h1 == 1);

    const BicanonicalReport t3 = factor_degree(make_cover(TypeId::T3, 4, 1));
    CHECK(t3.degree == 1);
    CHECK(t3.embedding);
    CHECK(t3.birational);
    CHECK_FALSE(t3.obstruction_h1.has_value());
}

TEST_CASE("genus-2 pencils") {
    CHECK(genus2_pencil(make_cover(TypeId::T5_1)) == 1);
    CHECK(genus2_pencil(make_cover(TypeId::T6_1)) == 1);
    for (int m = 2; m <= 6; ++m) CHECK(genus2_pencil(make_cover(TypeId::T8_2, m)) == m + 1);
    CHECK(genus2_pencil(make_cover(TypeId::T8_1)) == 2);
    for (int m = 1; m <= 6; ++m) CHECK(genus2_pencil(make_cover(TypeId::T7, m)) == m);
    CHECK_FALSE(genus2_pencil(make_cover(TypeId::T3, 2, 0)).has_value());
    CHECK_FALSE(genus2_pencil(make_cover(TypeId::T10)).has_value());
}

TEST_CASE("projective normality of the image") {
    CHECK(image_projectively_normal(make_cover(TypeId::T5_1), 4).projectively_normal);
    CHECK(image_projectively_normal(make_cover(TypeId::T6_1), 4).projectively_normal);
    CHECK(image_projectively_normal(make_cover(TypeId::T8_1), 5).projectively_normal);
    CHECK(image_projectively_normal(make_cover(TypeId::T7, 2), 4).projectively_normal);
    for (int m = 2; m <= 5; ++m)
        CHECK(image_projectively_normal(make_cover(TypeId::T8_2, m), 3).projectively_normal);
    CHECK_THROWS_AS(image_projectively_normal(make_cover(TypeId::T3, 2, 0), 3),
                    std::invalid_argument);
}

TEST_CASE("h1 of pullbacks to the desingularization") {
    const SheafSplitting t10 = y_splitting(make_cover(TypeId::T10));
    const SheafSplitting t12 = y_splitting(make_cover(TypeId::T12));
    CHECK(h1_pullback(t10, ruled(1, 4)) == 1);
    CHECK(h1_pullback(t12, ruled(0, -2)) == 1);
    // All summands checked one by one: C0+6f leaves h1 only on the last
    // twist C0+6f-3C0-6f = -2C0, whose h1 on F_2 is 3.
    CHECK(h1_pullback_terms(t10, ruled(1, 6)) == std::vector<long long>{0, 0, 0, 3});
    CHECK(h1_pullback(t10, ruled(1, 6)) == 3);
    // Pullbacks of the cone polarization carry no h1.
    for (int n = 1; n <= 6; ++n) {
        CHECK(h1_pullback(t10, ruled(n, 2 * n)) == 0);
        CHECK(h1_pullback(t12, ruled(n, 2 * n)) == 0);
    }
}

TEST_CASE("singular-type obstructions") {
    for (TypeId t : {TypeId::T9, TypeId::T10, TypeId::T11, TypeId::T12}) {
        const CoverDescriptor c = make_cover(t);
        CHECK(singular_obstruction(c) == 1);
        const std::vector<long long> terms = singular_obstruction_terms(c);
        const std::vector<long long> expected =
            t == TypeId::T12 ? std::vector<long long>{1, 0, 0, 0}
                             : std::vector<long long>{0, 0, 0, 1};
        CHECK(terms == expected);
    }
    CHECK_THROWS_AS(singular_obstruction(make_cover(TypeId::T7, 2)), std::invalid_argument);
}
