#include "supernorm/constants.hpp"

#include <cmath>

#include "supernorm/primes.hpp"
#include "supernorm/summation.hpp"

namespace supernorm {

const MathConstants& math_constants() {
    static const MathConstants constants{
        0.57721566490153286060651209008240243104215933593992,
        0.26149721284764278375542683860869585905156664826120,
        1.78107241799019798523650410310717954916964521430343,
        0.56145948356688516982414321479088078676571038692515,
        "0.57721566490153286060651209008240243104215933593992",
        "0.26149721284764278375542683860869585905156664826120",
        "1.78107241799019798523650410310717954916964521430343",
        "0.56145948356688516982414321479088078676571038692515",
    };
    return constants;
}

double recompute_mertens_constant(const PrimeTable& table) {
    CompensatedSum s(math_constants().gamma);
    for (const auto p : table.primes()) {
        const double inv = 1.0 / static_cast<double>(p);
        s.add(std::log1p(-inv) + inv);
    }
    return s.value();
}

}  // namespace supernorm
