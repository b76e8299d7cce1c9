#ifndef MZVKIT_POLYLOG_HPP
#define MZVKIT_POLYLOG_HPP

#include "mzvkit/bigfloat.hpp"
#include "mzvkit/indexset.hpp"

#include <vector>
#include <stdexcept>

namespace mzvkit {

// Iterated integral over [0, 1/2] of a two-letter word, X = dt/t and
// Y = dt/(1-t), letters read outermost first. Represent the primitive as
// F_v(z) = sum_{m} c_m z^m with F_empty = 1 and build coefficients from the
// innermost letter outward:
//   v = X v':  c_m = c_m(v') / m
//   v = Y v':  c_m = (1/m) * sum_{0<=i<m} c_i(v')
// Convergent at z = 1/2 with geometric tails, so M terms give roughly
// M*log10(2) digits.
inline BigFloat polylog_half_fixed(const Word& v, int terms, mpfr_prec_t bits) {
    if (!v.empty() && v.back() == 'X')
        throw std::invalid_argument("polylog_half: divergent word (innermost letter X)");

    const int M = terms;
    std::vector<BigFloat> c(static_cast<size_t>(M) + 1, BigFloat(bits));
    c[0] = BigFloat::from_long(1, bits);

    std::vector<BigFloat> next(static_cast<size_t>(M) + 1, BigFloat(bits));
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it == 'X') {
            for (int m = 1; m <= M; ++m) {
                next[static_cast<size_t>(m)] = c[static_cast<size_t>(m)];
                next[static_cast<size_t>(m)].div_ui(static_cast<unsigned long>(m));
            }
        } else if (*it == 'Y') {
            BigFloat run(bits);
            for (int m = 1; m <= M; ++m) {
                run += c[static_cast<size_t>(m - 1)];
                next[static_cast<size_t>(m)] = run;
                next[static_cast<size_t>(m)].div_ui(static_cast<unsigned long>(m));
            }
        } else {
            throw std::invalid_argument("polylog_half: alphabet is {X, Y}");
        }
        next[0] = BigFloat(bits);
        std::swap(c, next);
    }

    // Horner evaluation of sum c_m (1/2)^m
    BigFloat acc(bits);
    for (int m = M; m >= 1; --m) {
        acc += c[static_cast<size_t>(m)];
        acc.div_ui(2);
    }
    return acc + c[0];
}

// Term count giving `digits` correct decimals with margin; the heuristic
// stop test in polylog_half double-checks it.
inline int polylog_terms_for(int digits) {
    return static_cast<int>(std::ceil(3.33 * digits)) + 16;
}

// Evaluate with the configured number of terms and verify the tail
// heuristically: the value with 8 extra terms must agree to the target
// precision, otherwise escalate the term count.
inline BigFloat polylog_half(const Word& v, int digits) {
    mpfr_prec_t bits = BigFloat::bits_for_digits(digits + 10);
    int terms = polylog_terms_for(digits);
    BigFloat tol = BigFloat::pow10(-digits - 2, bits);
    for (int round = 0; round < 6; ++round) {
        BigFloat a = polylog_half_fixed(v, terms, bits);
        BigFloat b = polylog_half_fixed(v, terms + 8, bits);
        if ((a - b).abs() <= tol) return b;
        terms += 64;
    }
    throw std::runtime_error("polylog_half: precision cap exceeded for word " + v);
}

} // namespace mzvkit

#endif
