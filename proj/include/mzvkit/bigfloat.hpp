#ifndef MZVKIT_BIGFLOAT_HPP
#define MZVKIT_BIGFLOAT_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <stdexcept>
#include <utility>

namespace mzvkit {

// Arbitrary-precision real backed by mpfr_t. Every value carries its own
// precision; binary operations round to the wider of the two operands.
// Rounding mode is fixed to nearest, so results are deterministic across runs.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static mpfr_prec_t bits_for_digits(int digits) {
        // log2(10) = 3.3219..., plus guard bits for accumulated roundoff
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3220)) + 64;
    }

    static BigFloat with_digits(int digits) { return BigFloat(bits_for_digits(digits)); }

    static BigFloat from_long(long x, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigFloat from_mpq(const mpq_class& q, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_mpz(const mpz_class& z, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_string(const std::string& s, mpfr_prec_t bits) {
        BigFloat r(bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: cannot parse \"" + s + "\"");
        return r;
    }

    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    static BigFloat ln2(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigFloat& mul_si(long k) {
        mpfr_mul_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    BigFloat& div_ui(unsigned long k) {
        mpfr_div_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // this^k, k may be negative
    BigFloat pow_si(long k) const {
        BigFloat r(prec());
        mpfr_pow_si(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    // 10^k at this value's precision
    static BigFloat pow10(long k, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, k, MPFR_RNDN);
        return r;
    }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 30) const {
        if (digits < 2) digits = 2;
        int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
        std::string s(static_cast<size_t>(n), '\0');
        mpfr_snprintf(s.data(), static_cast<size_t>(n) + 1, "%.*Re", digits - 1, v_);
        return s;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

} // namespace mzvkit

#endif
