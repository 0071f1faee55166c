#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "supernorm/partition.hpp"

namespace supernorm {

enum class Ensemble { size, perimeter, max_part };
enum class Mode { individual, cumulative };
enum class Weight { norm, supernorm };

// Which statistic to evaluate: sum over the ensemble of N(lambda)^-beta or
// Nhat(lambda)^-beta. beta = 1 gives the reciprocal statistics, beta = 0
// counts the ensemble.
struct EnsembleSpec {
    Ensemble ensemble = Ensemble::size;
    Mode mode = Mode::individual;
    Restriction restriction = Restriction::all;
    Weight weight = Weight::supernorm;
    double beta = 1.0;

    friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

// Max-part sums that run over infinitely many terms without converging:
// any norm sum containing all partitions 1^k, and any sum whose geometric
// ratios are >= 1 (beta <= 0).
bool is_divergent(const EnsembleSpec& spec);

// Exact integer exponent if beta is integral and fits a long.
std::optional<long> integer_beta(double beta);

std::string_view name(Ensemble e);
std::string_view name(Mode m);
std::string_view name(Weight w);
std::string_view name(Restriction r);
// e.g. "perimeter/supernorm/individual/all/beta=1"
std::string describe(const EnsembleSpec& spec);

std::optional<Ensemble> parse_ensemble(std::string_view s);
std::optional<Mode> parse_mode(std::string_view s);
std::optional<Weight> parse_weight(std::string_view s);
std::optional<Restriction> parse_restriction(std::string_view s);

}  // namespace supernorm
