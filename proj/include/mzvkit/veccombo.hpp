#ifndef MZVKIT_VECCOMBO_HPP
#define MZVKIT_VECCOMBO_HPP

#include "mzvkit/groupring.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <sstream>

namespace mzvkit {

using Vec4 = std::array<mpz_class, 4>;

inline Vec4 vec4(long a, long b, long c, long d) {
    return Vec4{mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d)};
}

// Element of the free module Q[Z^4]: finite rational combination of integer
// row vectors. Generators are written e_{abcd}.
class VecCombo {
public:
    VecCombo() = default;

    static VecCombo of(const Vec4& v, const mpq_class& c = 1) {
        VecCombo r;
        r.add_term(v, c);
        return r;
    }

    const std::map<Vec4, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    mpq_class coeff(const Vec4& v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const Vec4& v, const mpq_class& c) {
        mpq_class cc = c;
        cc.canonicalize();
        if (cc == 0) return;
        auto [it, inserted] = terms_.emplace(v, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend VecCombo operator+(const VecCombo& a, const VecCombo& b) {
        VecCombo r = a;
        for (const auto& [v, c] : b.terms_) r.add_term(v, c);
        return r;
    }

    friend VecCombo operator-(const VecCombo& a, const VecCombo& b) {
        VecCombo r = a;
        for (const auto& [v, c] : b.terms_) r.add_term(v, -c);
        return r;
    }

    VecCombo scaled(const mpq_class& q) const {
        VecCombo r;
        if (q == 0) return r;
        for (const auto& [v, c] : terms_) r.terms_.emplace(v, c * q);
        return r;
    }

    friend bool operator==(const VecCombo& a, const VecCombo& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.get_str() << "*e(" << v[0].get_str() << ',' << v[1].get_str() << ','
               << v[2].get_str() << ',' << v[3].get_str() << ')';
        }
        return os.str();
    }

private:
    std::map<Vec4, mpq_class> terms_;
};

// Right action alpha . Gamma = sum a_j b_k (x_j M_k). No inverses here;
// Gamma may be supported on singular matrices (e.g. contain J).
inline VecCombo vec_act(const VecCombo& alpha, const GroupRingElem& gamma) {
    if (gamma.order() != 4) throw std::invalid_argument("vec_act: order-4 elements only");
    VecCombo r;
    for (const auto& [v, a] : alpha.terms())
        for (const auto& [m, b] : gamma.terms()) {
            std::vector<mpz_class> x(v.begin(), v.end());
            std::vector<mpz_class> y = row_times(x, m);
            r.add_term(Vec4{y[0], y[1], y[2], y[3]}, a * b);
        }
    return r;
}

// Reduce modulo the submodule spanned by generators whose first coordinate
// is zero (where the admissible generating polynomials vanish).
inline VecCombo congruence_reduce(const VecCombo& alpha) {
    VecCombo r;
    for (const auto& [v, c] : alpha.terms())
        if (v[0] != 0) r.add_term(v, c);
    return r;
}

inline bool congruent(const VecCombo& a, const VecCombo& b) {
    return congruence_reduce(a - b).is_zero();
}

// V_M^{i_1...i_n} = e_delta . M with delta the indicator of {i_1,...,i_n}:
// componentwise column sums of the selected rows of M.
inline Vec4 vmp(const IntMatrix& m, const std::set<int>& idx) {
    if (m.order() != 4) throw std::invalid_argument("vmp: order-4 matrices only");
    if (idx.empty()) throw std::invalid_argument("vmp: index set must be nonempty");
    Vec4 delta = vec4(0, 0, 0, 0);
    for (int i : idx) {
        if (i < 1 || i > 4) throw std::invalid_argument("vmp: indices must be in 1..4");
        delta[static_cast<size_t>(i - 1)] = 1;
    }
    std::vector<mpz_class> x(delta.begin(), delta.end());
    std::vector<mpz_class> y = row_times(x, m);
    return Vec4{y[0], y[1], y[2], y[3]};
}

} // namespace mzvkit

#endif
