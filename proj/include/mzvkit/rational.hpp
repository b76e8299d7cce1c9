#ifndef MZVKIT_RATIONAL_HPP
#define MZVKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <stdexcept>

namespace mzvkit {

// Exact scalars: mpz_class integers and mpq_class rationals (always kept
// canonical by GMP). These helpers cover the few operations gmpxx lacks.

inline mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline mpz_class pow_z(long base, unsigned long e) { return pow_z(mpz_class(base), e); }

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpq_class rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }
inline std::string to_string(const mpz_class& z) { return z.get_str(); }

inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: \"" + s + "\"");
    q.canonicalize();
    return q;
}

} // namespace mzvkit

#endif
