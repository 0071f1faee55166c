#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "supernorm/asymptotics.hpp"

namespace supernorm::cli {

struct FigureDef {
    std::string_view id;
    std::string_view description;
    std::uint64_t nmax;
    std::vector<AsymptoticModel> curves;  // first is `asymptotic`, second `asymptotic2`
};

const std::vector<FigureDef>& figures();
std::optional<FigureDef> find_figure(std::string_view id);

// Plotted statistic for n = 0..def.nmax, from the exact backend.
std::vector<double> figure_values(const PrimeTable& table, const FigureDef& def);

// CSV: n,stat,asymptotic,residual[,asymptotic2,residual2]. Cells of a curve
// outside its domain are left empty.
void write_figure(std::ostream& out, const PrimeTable& table, const FigureDef& def);

}  // namespace supernorm::cli
