#ifndef MZVKIT_MATRIX_HPP
#define MZVKIT_MATRIX_HPP

#include "mzvkit/rational.hpp"

#include <vector>
#include <string>
#include <sstream>
#include <stdexcept>
#include <initializer_list>

namespace mzvkit {

constexpr int kMaxOrder = 8;

struct NonUnimodular : std::runtime_error {
    mpz_class det;
    explicit NonUnimodular(mpz_class d)
        : std::runtime_error("matrix is not unimodular (det = " + d.get_str() + ")"),
          det(std::move(d)) {}
};

// Dense square matrix with exact integer entries, row-major. Orders stay
// tiny (<= 8), so the quadratic/cubic algorithms below are all we need.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}

    explicit IntMatrix(int order) : n_(order), a_(static_cast<size_t>(order) * order) {
        check_order(order);
    }

    IntMatrix(int order, std::initializer_list<long> entries) : IntMatrix(order) {
        if (static_cast<int>(entries.size()) != order * order)
            throw std::invalid_argument("IntMatrix: wrong number of entries");
        size_t i = 0;
        for (long e : entries) a_[i++] = e;
    }

    static IntMatrix identity(int order) {
        IntMatrix m(order);
        for (int i = 0; i < order; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        IntMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return m;
    }

    int order() const { return n_; }

    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
        x.check_same_order(y);
        IntMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
        x.check_same_order(y);
        IntMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        x.check_same_order(y);
        IntMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const mpz_class& xik = x.at(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < x.n_; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }

    // Cofactor expansion; exact and plenty fast for order <= 8.
    mpz_class det() const {
        if (n_ == 0) return 1;
        return det_rec(*this);
    }

    bool is_unimodular() const {
        mpz_class d = det();
        return d == 1 || d == -1;
    }

    // Exact inverse via adjugate / determinant; requires det = +-1 so the
    // inverse has integer entries.
    IntMatrix inverse() const {
        mpz_class d = det();
        if (d != 1 && d != -1) throw NonUnimodular(d);
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                mpz_class c = minor_det(j, i);  // adjugate = transposed cofactors
                if ((i + j) % 2 != 0) c = -c;
                r.at(i, j) = (d == 1) ? c : mpz_class(-c);
            }
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

    // Total order on (order, entries); used as a canonical map key.
    friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
        if (x.n_ != y.n_) return x.n_ < y.n_;
        for (size_t i = 0; i < x.a_.size(); ++i) {
            int c = cmp(x.a_[i], y.a_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < n_; ++i) {
            os << '(';
            for (int j = 0; j < n_; ++j) {
                if (j) os << ',';
                os << at(i, j).get_str();
            }
            os << ')';
            if (i + 1 < n_) os << '\n';
        }
        return os.str();
    }

private:
    static void check_order(int order) {
        if (order < 1 || order > kMaxOrder)
            throw std::invalid_argument("IntMatrix: order must be in 1.." + std::to_string(kMaxOrder));
    }

    void check_same_order(const IntMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMatrix: order mismatch");
    }

    mpz_class minor_det(int row, int col) const {
        if (n_ == 1) return 1;
        IntMatrix m(n_ - 1);
        for (int i = 0, mi = 0; i < n_; ++i) {
            if (i == row) continue;
            for (int j = 0, mj = 0; j < n_; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return det_rec(m);
    }

    static mpz_class det_rec(const IntMatrix& m) {
        int n = m.n_;
        if (n == 1) return m.at(0, 0);
        if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        mpz_class acc = 0;
        for (int j = 0; j < n; ++j) {
            if (m.at(0, j) == 0) continue;
            mpz_class sub = m.minor_det(0, j);
            if (j % 2 == 0)
                acc += m.at(0, j) * sub;
            else
                acc -= m.at(0, j) * sub;
        }
        return acc;
    }

    int n_;
    std::vector<mpz_class> a_;
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) { return a * b; }
inline IntMatrix mat_inv(const IntMatrix& a) { return a.inverse(); }

// A (+) B: orders add, off-diagonal blocks are zero.
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.order() + b.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.order(); ++i)
        for (int j = 0; j < b.order(); ++j) r.at(a.order() + i, a.order() + j) = b.at(i, j);
    return r;
}

// Row vector times matrix.
inline std::vector<mpz_class> row_times(const std::vector<mpz_class>& x, const IntMatrix& m) {
    if (static_cast<int>(x.size()) != m.order())
        throw std::invalid_argument("row_times: size mismatch");
    std::vector<mpz_class> r(x.size());
    for (int j = 0; j < m.order(); ++j)
        for (int i = 0; i < m.order(); ++i) r[static_cast<size_t>(j)] += x[static_cast<size_t>(i)] * m.at(i, j);
    return r;
}

} // namespace mzvkit

#endif
