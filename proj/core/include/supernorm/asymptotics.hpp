#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supernorm/bounds.hpp"
#include "supernorm/constants.hpp"
#include "supernorm/genfun.hpp"

namespace supernorm {

// Closed-form comparison curves. log is the natural logarithm.
enum class AsymptoticModel {
    lehmer_linear,  // e^-gamma n
    lehmer_const,   // e^-gamma
    log,            // e^gamma log n
    log_loglog,     // e^gamma (log n + log log n)
    inv,            // e^gamma / n
    unit,           // 1
    ident,          // n
};

std::string_view name(AsymptoticModel model);
// Smallest n at which the model is finite: 2 for log_loglog, 1 otherwise.
std::uint64_t domain_start(AsymptoticModel model);

// Throws std::domain_error below domain_start(model).
double predictor(const MathConstants& constants, AsymptoticModel model, std::uint64_t n);

struct ResidualRow {
    std::uint64_t n;
    double value;
    double prediction;
    double residual;  // value - prediction
    double ratio;     // value / prediction
};

struct ResidualReport {
    std::string label;
    EnsembleSpec spec;
    AsymptoticModel model;
    std::vector<ResidualRow> rows;
};

// Aligned text table of the rows.
std::string summarize(const ResidualReport& report, int precision = 12);

ResidualReport residual_report(const CoeffSeries& series, AsymptoticModel model, IntRange n_range);

// Per-n record of the cumulative supernorm chain
//   Chat_size(n) <= Chat_per(n) <= Chat_max(n).
struct ChainRow {
    std::uint64_t n;
    bool holds;
    bool strict_size_per;
    bool strict_per_max;
};

struct InequalitySuite {
    // cumulative_chain, size_norm_identity, perimeter_norm_identity,
    // perimeter_norm_linear_bound, size_vs_perimeter_witness.
    std::vector<BoundReport> reports;
    std::vector<ChainRow> chain;
    // Smallest n from which both chain inequalities are strict through nmax.
    std::uint64_t strict_from = 0;
    double witness_size = 0.0;
    double witness_perimeter = 0.0;
};

// Runs over 1 <= n <= nmax:
//  - the cumulative supernorm chain with strictness per n,
//  - W_size(n) = C*_size(n) and W_per(n) = C*_per(n) (margin 0 when equal,
//    -1 at the first mismatch),
//  - W_per(n) <= n,
//  - the individual witness What_size(14) > What_per(14) (needs nmax >= 14).
// Identities are rational equalities under the exact backend and are checked
// to 1e-12 relative error under the float backend.
InequalitySuite inequality_suite(const PrimeTable& table, std::uint64_t nmax, Backend backend);

// Descriptive tables, no verdicts. What_size, What_per and What_max (closed
// form) against e^gamma / n, so each row's ratio is n What(n) / e^gamma; then
// W_size(n) What_size(n) against 1.
std::vector<ResidualReport> conjecture_report(const PrimeTable& table, std::uint64_t nmax);

// W*_size(2k+1) < W*_size(2k): the odd/even split visible for small sizes.
struct ParityRow {
    std::uint64_t k;
    double even_value;
    double odd_value;
    bool odd_smaller;
};
std::vector<ParityRow> no_ones_parity(const PrimeTable& table, std::uint64_t kmax);

// -1/(log n)^2 <= Chat_max(n) - e^gamma (log n + log log n) <= 2 log log n / log n
// for every n in range; requires p_{n_range.lo} >= kMertensThreshold. The
// product is maintained incrementally in log space across the scan.
BoundReport mertens_window_check(const PrimeTable& table, IntRange n_range,
                                 const MarginObserver& observer = {});

}  // namespace supernorm
