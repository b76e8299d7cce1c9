#ifndef MZVKIT_POLY_HPP
#define MZVKIT_POLY_HPP

#include "mzvkit/bigfloat.hpp"
#include "mzvkit/groupring.hpp"
#include "mzvkit/rational.hpp"

#include <map>
#include <vector>
#include <string>
#include <sstream>
#include <stdexcept>

namespace mzvkit {

// ---- coefficient field glue -------------------------------------------
//
// Polynomials are generic over the coefficient field: exact mpq_class or
// BigFloat. The combinatorial layer (linear substitution, multinomial
// expansion) always runs in exact rationals; coefficients of the target
// field enter through coeff_mul_q, one rounded multiply per written term.

inline bool coeff_is_zero(const mpq_class& c) { return c == 0; }
inline bool coeff_is_zero(const BigFloat& c) { return c.is_zero(); }

// mpq equality needs canonical operands; normalize at the insertion boundary
// so callers may hand over raw num/den pairs.
inline mpq_class coeff_canon(mpq_class c) {
    c.canonicalize();
    return c;
}
inline BigFloat coeff_canon(BigFloat c) { return c; }

inline mpq_class coeff_mul_q(const mpq_class& c, const mpq_class& q) { return c * q; }
inline BigFloat coeff_mul_q(const BigFloat& c, const mpq_class& q) {
    return c * BigFloat::from_mpq(q, c.prec());
}

inline std::string coeff_str(const mpq_class& c) { return c.get_str(); }
inline std::string coeff_str(const BigFloat& c) { return c.to_string(); }

// Square matrix over Q, used as a substitution: x -> x * M.
struct RatMatrix {
    int n = 0;
    std::vector<mpq_class> a;

    RatMatrix() = default;
    explicit RatMatrix(int order) : n(order), a(static_cast<size_t>(order) * order) {}

    static RatMatrix from(const IntMatrix& m) {
        RatMatrix r(m.order());
        for (int i = 0; i < m.order(); ++i)
            for (int j = 0; j < m.order(); ++j) r.at(i, j) = mpq_class(m.at(i, j));
        return r;
    }

    mpq_class& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const mpq_class& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

using ExpVec = std::vector<int>;

// Homogeneous polynomial: sparse map from exponent vectors to coefficients.
// Every exponent vector has length nvars and sums to degree.
template <class C>
class HPoly {
public:
    HPoly() : nvars_(0), degree_(0) {}
    HPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (nvars < 1 || nvars > kMaxOrder) throw std::invalid_argument("HPoly: bad nvars");
        if (degree < 0) throw std::invalid_argument("HPoly: negative degree");
    }

    static HPoly monomial(int nvars, ExpVec e, C c) {
        int d = 0;
        for (int v : e) d += v;
        HPoly p(nvars, d);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    static HPoly variable(int nvars, int i, C c) {
        ExpVec e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        return monomial(nvars, std::move(e), std::move(c));
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, C>& terms() const { return terms_; }

    C coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(ExpVec e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("HPoly: exponent length mismatch");
        int d = 0;
        for (int v : e) {
            if (v < 0) throw std::invalid_argument("HPoly: negative exponent");
            d += v;
        }
        if (d != degree_) throw std::invalid_argument("HPoly: exponent degree mismatch");
        C cc = coeff_canon(c);
        if (coeff_is_zero(cc)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(cc));
        } else {
            it->second += cc;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend HPoly operator+(const HPoly& a, const HPoly& b) {
        a.check_shape(b);
        HPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend HPoly operator-(const HPoly& a, const HPoly& b) {
        a.check_shape(b);
        HPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    HPoly scaled_q(const mpq_class& q) const {
        HPoly r(nvars_, degree_);
        if (q == 0) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, coeff_mul_q(c, q));
        return r;
    }

    friend bool operator==(const HPoly& a, const HPoly& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    // One line per term: "e1 e2 ... en : coefficient".
    std::string to_string() const {
        std::ostringstream os;
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) os << ' ';
                os << e[i];
            }
            os << " : " << coeff_str(c) << '\n';
        }
        return os.str();
    }

private:
    void check_shape(const HPoly& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_)
            throw std::invalid_argument("HPoly: shape mismatch");
    }

    int nvars_;
    int degree_;
    std::map<ExpVec, C> terms_;
};

// ---- exact expansion kernel -------------------------------------------

inline HPoly<mpq_class> poly_mul_exact(const HPoly<mpq_class>& a, const HPoly<mpq_class>& b) {
    HPoly<mpq_class> r(a.nvars(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExpVec e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

// Powers of the linear forms x -> (x M)_i, memoized per substitution call.
class SubstKernel {
public:
    SubstKernel(const RatMatrix& m) : m_(m) {
        forms_.reserve(static_cast<size_t>(m.n));
        for (int i = 0; i < m.n; ++i) {
            // variable i is replaced by column i of M over x_1..x_n
            HPoly<mpq_class> f(m.n, 1);
            for (int j = 0; j < m.n; ++j) {
                if (m.at(j, i) == 0) continue;
                ExpVec e(static_cast<size_t>(m.n), 0);
                e[static_cast<size_t>(j)] = 1;
                f.add_term(std::move(e), m.at(j, i));
            }
            forms_.push_back(std::move(f));
            powers_.push_back({HPoly<mpq_class>::monomial(m.n, ExpVec(static_cast<size_t>(m.n), 0), 1)});
        }
    }

    // Exact expansion of prod_i (x M)_i ^ e_i.
    HPoly<mpq_class> expand(const ExpVec& e) {
        HPoly<mpq_class> acc = power(0, e[0]);
        for (int i = 1; i < m_.n; ++i)
            if (e[static_cast<size_t>(i)] > 0) acc = poly_mul_exact(acc, power(i, e[static_cast<size_t>(i)]));
        return acc;
    }

private:
    const HPoly<mpq_class>& power(int i, int k) {
        auto& cache = powers_[static_cast<size_t>(i)];
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(poly_mul_exact(cache.back(), forms_[static_cast<size_t>(i)]));
        return cache[static_cast<size_t>(k)];
    }

    RatMatrix m_;
    std::vector<HPoly<mpq_class>> forms_;
    std::vector<std::vector<HPoly<mpq_class>>> powers_;
};

// p(x M): each variable replaced by its linear form, expanded exactly.
template <class C>
HPoly<C> subst_linear(const HPoly<C>& p, const RatMatrix& m) {
    if (m.n != p.nvars()) throw std::invalid_argument("subst_linear: order mismatch");
    HPoly<C> out(p.nvars(), p.degree());
    SubstKernel kernel(m);
    for (const auto& [e, c] : p.terms()) {
        HPoly<mpq_class> expansion = kernel.expand(e);
        for (const auto& [eo, q] : expansion.terms()) out.add_term(eo, coeff_mul_q(c, q));
    }
    return out;
}

template <class C>
HPoly<C> subst_linear(const HPoly<C>& p, const IntMatrix& m) {
    return subst_linear(p, RatMatrix::from(m));
}

// Right action (p|Gamma)(x) = sum a_k p(x M_k^{-1}).
template <class C>
HPoly<C> act(const HPoly<C>& p, const GroupRingElem& gamma) {
    if (gamma.order() != p.nvars()) throw std::invalid_argument("act: order mismatch");
    HPoly<C> out(p.nvars(), p.degree());
    for (const auto& [m, a] : gamma.terms()) {
        HPoly<C> part = subst_linear(p, m.inverse());
        out = out + part.scaled_q(a);
    }
    return out;
}

template <class C>
C eval_poly(const HPoly<C>& p, const std::vector<C>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("eval_poly: point length mismatch");
    C acc{};
    for (const auto& [e, c] : p.terms()) {
        C t = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

} // namespace mzvkit

#endif
