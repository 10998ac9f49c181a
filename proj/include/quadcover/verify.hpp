#pragma once

#include <string>
#include <vector>

#include "quadcover/cover_types.hpp"

// Exhaustive verification sweeps over parameter grids.  Each suite returns
// how many checks ran, how many failed, and a few failure messages.  The
// default grids match the documented acceptance bounds and complete in
// seconds.

namespace quadcover {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // capped

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    bool passed() const { return failed == 0; }
    void expect(bool ok, const std::string& context);
};

// Cohomology engine sweeps (Hirzebruch e <= e_max plus the plane,
// coefficients in [-box, box]).
SuiteResult verify_h0_oracle(int e_max = 4, int box = 12);
SuiteResult verify_serre_duality(int e_max = 4, int box = 12);
SuiteResult verify_chi_consistency(int e_max = 4, int box = 12);
SuiteResult verify_h0_monotonicity(int e_max = 4, int box = 12);
SuiteResult verify_nef_vanishing(int e_max = 4, int box = 12);

// Multiplication maps.
SuiteResult verify_mult_map_properties();
SuiteResult verify_surjonhirz_soundness(int a_max = 8, int b_max = 12);
SuiteResult verify_dense_rank_oracle();

// Classification and splittings.
SuiteResult verify_classification(int m_max = 12);
SuiteResult verify_splitting_listings(int m_max = 12);

// Bicanonical map.
SuiteResult verify_degrees(int m_max = 12);
SuiteResult verify_normal_generation(int m_max = 10, int n_max = 5);
SuiteResult verify_bicanonical_h0(int m_max = 12);
SuiteResult verify_singular_obstructions();
SuiteResult verify_image_normality(int m_max = 6, int r_bound = 4);
SuiteResult verify_genus2_pencils(int m_max = 12);

// Canonical ring.
SuiteResult verify_generator_counts(int m_max = 10);
SuiteResult verify_deg2_formula(int m_max = 10);
SuiteResult verify_veronese_phenomenon(int m_max = 10);

// Cross-checks: product invariants, exceptional numerics, fiber genus.
SuiteResult verify_consistency_crosschecks(int m_max = 12);

struct VerifyOptions {
    int m_max = 12;
    int n_max = 5;
    bool oracle = false;    // include the dense-rank cross-check
    std::string only;       // restrict to suites whose name contains this
};

std::vector<SuiteResult> run_suites(const VerifyOptions& options);

}  // namespace quadcover
