#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glsnorm {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed deviation / quantity under test
    double threshold = 0.0;  // pinned tolerance the measurement is held to
    std::string note;
};

namespace checks {

// Sharp composition constant: quadrature vs closed form over an (r,p,q) grid,
// and the trial-family sweep attaining it with the predicted exponent.
CheckResult composition_closed_form_vs_quadrature();
CheckResult composition_beta_sweep();

// Divergence boundary and leading asymptotics for the hard power-map case.
CheckResult hard_case_finiteness_boundary();
CheckResult hard_case_asymptotic_ratio();

// p = q endpoint: essential-supremum form of the constant.
CheckResult endpoint_equals_ess_sup();

// Multiplicative sharpness: discrete oracle, continuous example, divergence
// flag.
CheckResult multiplicative_discrete_oracle(std::uint64_t seed);
CheckResult multiplicative_continuous_example();
CheckResult multiplicative_divergence_flag();

// Product-operator consistency across code paths.
CheckResult product_bound_reduces_to_composition();
CheckResult product_bound_reduces_to_multiplicative();
CheckResult transfer_matches_product_bound();

// Upper bound never violated: seeded random probes per operator family.
CheckResult random_probes_composition(std::uint64_t seed, int count);
CheckResult random_probes_multiplicative(std::uint64_t seed, int count);
CheckResult random_probes_product(std::uint64_t seed, int count);
CheckResult random_probes_independent(std::uint64_t seed, int count);

// Hoelder inequality and truncation-family properties.
CheckResult hoelder_property(std::uint64_t seed);
CheckResult truncation_monotone();

// Grand-Lebesgue layer.
CheckResult natural_psi_normalization();
CheckResult degenerate_reproduces_lr();
CheckResult gls_contract_sigma(std::uint64_t seed);
CheckResult weak_delta2_cases();
CheckResult counterexample_pipeline();

// Analysis utilities.
CheckResult min_identity_vs_grid(std::uint64_t seed);
CheckResult young_fenchel_biconjugacy(std::uint64_t seed);
CheckResult orlicz_continuity_and_slope();

}  // namespace checks

/// Suites: sharpness | holder | gls | counterexample | all.
/// Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

/// Deterministic plain-text report: one line per check plus a summary line.
std::string render_report(const std::string& suite, std::uint64_t seed,
                          const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace glsnorm
