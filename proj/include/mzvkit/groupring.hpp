#ifndef MZVKIT_GROUPRING_HPP
#define MZVKIT_GROUPRING_HPP

#include "mzvkit/matrix.hpp"
#include "mzvkit/permutation.hpp"

#include <map>
#include <vector>
#include <string>
#include <sstream>
#include <stdexcept>

namespace mzvkit {

// Finite rational combination of integer square matrices of one order.
// This is the monoid algebra of M_n(Z); elements supported on unimodular
// matrices form the group ring of GL_n(Z) inside it. Kept canonical: no
// zero coefficients, matrices deduplicated by the ordered term map.
class GroupRingElem {
public:
    GroupRingElem() : n_(0) {}
    explicit GroupRingElem(int order) : n_(order) {}

    static GroupRingElem identity(int order) {
        GroupRingElem g(order);
        g.add_term(IntMatrix::identity(order), 1);
        return g;
    }

    static GroupRingElem of(const IntMatrix& m, const mpq_class& c = 1) {
        GroupRingElem g(m.order());
        g.add_term(m, c);
        return g;
    }

    static GroupRingElem of(const Permutation& s, const mpq_class& c = 1) {
        return of(perm_to_matrix(s), c);
    }

    int order() const { return n_; }
    size_t support_size() const { return terms_.size(); }
    const std::map<IntMatrix, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpq_class coeff(const IntMatrix& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const IntMatrix& m, const mpq_class& c) {
        if (n_ == 0) n_ = m.order();
        if (m.order() != n_) throw std::invalid_argument("GroupRingElem: order mismatch");
        mpq_class cc = c;
        cc.canonicalize();
        if (cc == 0) return;
        auto [it, inserted] = terms_.emplace(m, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        if (a.n_ && b.n_ && a.n_ != b.n_) throw std::invalid_argument("GroupRingElem: order mismatch");
        GroupRingElem r(a.n_ ? a.n_ : b.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    GroupRingElem scaled(const mpq_class& q) const {
        GroupRingElem r(n_);
        if (q == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * q);
        return r;
    }

    GroupRingElem operator-() const { return scaled(-1); }

    // Coefficientwise inverse image: sum a_k M_k -> sum a_k M_k^{-1}.
    // Anti-homomorphism on products; every support matrix must be unimodular.
    GroupRingElem bar() const {
        GroupRingElem r(n_);
        for (const auto& [m, c] : terms_) r.add_term(m.inverse(), c);
        return r;
    }

    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << terms_.size() << " term(s), order " << n_ << '\n';
        for (const auto& [m, c] : terms_) {
            os << "coeff " << c.get_str() << ":\n" << m.to_string() << '\n';
        }
        return os.str();
    }

private:
    int n_;
    std::map<IntMatrix, mpq_class> terms_;
};

inline GroupRingElem gr_bar(const GroupRingElem& g) { return g.bar(); }

// S(H) = sum of the matrices of the permutations in H.
inline GroupRingElem group_sum(const std::vector<Permutation>& h) {
    if (h.empty()) throw std::invalid_argument("group_sum: empty set");
    GroupRingElem g(h.front().degree());
    for (const auto& s : h) {
        if (s.degree() != h.front().degree())
            throw std::invalid_argument("group_sum: mixed degrees");
        g.add_term(perm_to_matrix(s), 1);
    }
    if (g.support_size() != h.size())
        throw std::invalid_argument("group_sum: duplicate permutations");
    return g;
}

// sh_{j,n}: sum over permutations increasing on 1..j and on j+1..n.
// Exactly C(n, j) of them: each is determined by the subset sigma({1..j}).
inline GroupRingElem shuffle_element(int j, int n) {
    if (n < 2 || n > kMaxOrder || j < 1 || j > n - 1)
        throw std::invalid_argument("shuffle_element: need 1 <= j <= n-1, n <= 8");
    GroupRingElem g(n);
    for (const auto& s : all_permutations(n)) {
        bool ok = true;
        for (int i = 1; i < j && ok; ++i) ok = s(i) < s(i + 1);
        for (int i = j + 1; i < n && ok; ++i) ok = s(i) < s(i + 1);
        if (ok) g.add_term(perm_to_matrix(s), 1);
    }
    return g;
}

// Reinterpret an element supported on permutation matrices of degree m as
// one of degree n >= m, each permutation extended by fixed points.
inline GroupRingElem embed(const GroupRingElem& g, int n) {
    if (n < g.order()) throw std::invalid_argument("embed: target order too small");
    GroupRingElem r(n);
    for (const auto& [m, c] : g.terms()) {
        // recover the permutation from its matrix
        std::vector<int> img(static_cast<size_t>(m.order()));
        for (int col = 0; col < m.order(); ++col) {
            int hit = -1;
            for (int row = 0; row < m.order(); ++row) {
                const mpz_class& e = m.at(row, col);
                if (e == 1 && hit < 0)
                    hit = row;
                else if (e != 0)
                    throw std::invalid_argument("embed: support is not permutation matrices");
            }
            if (hit < 0) throw std::invalid_argument("embed: support is not permutation matrices");
            img[static_cast<size_t>(col)] = hit + 1;
        }
        r.add_term(perm_to_matrix(Permutation(std::move(img)).extended(n)), c);
    }
    return r;
}

} // namespace mzvkit

#endif
