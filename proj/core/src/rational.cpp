#include "supernorm/rational.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace supernorm {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) {
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                         : static_cast<unsigned long>(exponent);
    if (exponent < 0 && base == 0) throw std::domain_error("zero to a negative power");
    Rational r(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
    if (exponent < 0) r = 1 / r;
    r.canonicalize();
    return r;
}

}  // namespace supernorm
