#pragma once

#include <string_view>

namespace supernorm {

class PrimeTable;

struct MathConstants {
    // Euler-Mascheroni constant.
    double gamma;
    // Meissel-Mertens constant, lim (sum_{p<=x} 1/p - log log x).
    double mertens_m;
    double e_gamma;
    double e_neg_gamma;

    // 50 significant digits of each, for display and for callers that
    // want to parse into a wider type.
    std::string_view gamma_digits;
    std::string_view mertens_m_digits;
    std::string_view e_gamma_digits;
    std::string_view e_neg_gamma_digits;
};

const MathConstants& math_constants();

// M = gamma + sum_p (log(1 - 1/p) + 1/p), truncated at the sieve limit.
// The tail beyond x is O(1/(x log x)).
double recompute_mertens_constant(const PrimeTable& table);

}  // namespace supernorm
