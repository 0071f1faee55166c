#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supernorm/genfun.hpp"

namespace supernorm {

struct VerifyOptions {
    std::uint64_t nmax = 20;             // oracle comparisons and identities
    std::uint64_t chain_nmax = 70;       // cumulative supernorm chain
    std::uint64_t float_bound_nmax = 2000;  // W_per(n) <= n by the float DP
    std::uint64_t closed_form_nmax = 10'000;
    std::uint64_t product_nmax = 200;    // exact Chat_max against the prime product
    std::uint64_t bijection_bound = 10'000;
};

// Evaluators under test. Defaults are evaluate() and oracle_series(); tests
// substitute faulty versions to check that failures are reported.
struct Evaluators {
    std::function<CoeffSeries(const PrimeTable&, const EnsembleSpec&, std::uint64_t, Backend)> series;
    std::function<std::vector<Rational>(const PrimeTable&, const EnsembleSpec&, std::uint64_t)> oracle;
};
Evaluators default_evaluators();

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    // One line per failing case: the first failing n with both values.
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    bool passed() const;
};

// Suites, in order:
//   oracle_equivalence, norm_identities, cumulative_chain,
//   perimeter_norm_bound, closed_forms, supernorm_bijection, witness_n14.
VerificationReport run_verification(const PrimeTable& table, const VerifyOptions& options = {},
                                    const Evaluators& evaluators = default_evaluators());

std::string to_text(const VerificationReport& report);

}  // namespace supernorm
