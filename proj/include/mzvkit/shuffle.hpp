#ifndef MZVKIT_SHUFFLE_HPP
#define MZVKIT_SHUFFLE_HPP

#include "mzvkit/mzv.hpp"
#include "mzvkit/rational.hpp"

#include <map>
#include <mutex>
#include <string>

namespace mzvkit {

// Finite rational combination of words.
class WordCombo {
public:
    WordCombo() = default;

    static WordCombo of(const Word& w, const mpq_class& c = 1) {
        WordCombo r;
        r.add_term(w, c);
        return r;
    }

    const std::map<Word, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpq_class coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const Word& w, const mpq_class& c) {
        mpq_class cc = c;
        cc.canonicalize();
        if (cc == 0) return;
        auto [it, inserted] = terms_.emplace(w, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend WordCombo operator+(const WordCombo& a, const WordCombo& b) {
        WordCombo r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend WordCombo operator-(const WordCombo& a, const WordCombo& b) {
        WordCombo r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }

    WordCombo scaled(const mpq_class& q) const {
        WordCombo r;
        for (const auto& [w, c] : terms_) r.add_term(w, c * q);
        return r;
    }

    mpq_class total_mass() const {
        mpq_class s = 0;
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    friend bool operator==(const WordCombo& a, const WordCombo& b) { return a.terms_ == b.terms_; }

private:
    std::map<Word, mpq_class> terms_;
};

// Shuffle product: sum over all interleavings preserving the internal order
// of both factors. Total coefficient mass is C(|u|+|v|, |u|).
inline WordCombo shuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordCombo::of(v);
    if (v.empty()) return WordCombo::of(u);
    // memo over suffix pairs would be overkill at these lengths
    WordCombo left = shuffle(u.substr(1), v);
    WordCombo right = shuffle(u, v.substr(1));
    WordCombo r;
    for (const auto& [w, c] : left.terms()) r.add_term(u.substr(0, 1) + w, c);
    for (const auto& [w, c] : right.terms()) r.add_term(v.substr(0, 1) + w, c);
    return r;
}

// Shuffle regularization at T = 0, expressing any word that ends in Y as a
// rational combination of admissible words of the same weight.
//
// For w = Y^a X v ending in Y, the shuffle Y sh (Y^{a-1} X v) expands as
// (a) copies of w plus insertions of the extracted Y strictly deeper in the
// word. The regularized value of the product is reg(Y) * reg(rest) = 0, so
// w = -(1/a) * (deeper insertions), and each deeper insertion has fewer
// leading Ys. Words of the form Y^k regularize to 0.
class Regularizer {
public:
    // Combination of admissible words representing the input at T = 0.
    WordCombo regularize0(const Word& w) {
        if (w.empty() || w.back() != 'Y')
            throw std::invalid_argument("regularize0: word must end in Y");
        if (word_admissible(w)) return WordCombo::of(w);

        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }

        WordCombo out;
        size_t first_x = w.find('X');
        if (first_x == std::string::npos) {
            // pure Y^k: the regularized value is a multiple of T, zero at T = 0
            out = WordCombo();
        } else {
            Word rest = w.substr(1);
            WordCombo shuf = shuffle("Y", rest);
            mpq_class self = shuf.coeff(w);
            // every other term has strictly fewer leading Ys
            WordCombo acc;
            for (const auto& [word, c] : shuf.terms()) {
                if (word == w) continue;
                acc = acc + regularize0(word).scaled(c);
            }
            out = acc.scaled(mpq_class(-1) / self);
        }

        std::lock_guard<std::mutex> lk(mu_);
        return memo_.emplace(w, std::move(out)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Word, WordCombo> memo_;
};

// Numeric evaluation of regularized values on top of an MzvEvaluator.
// Admissible index sets pass straight through to the convergent engine.
class RegEvaluator {
public:
    explicit RegEvaluator(MzvEvaluator& ev) : ev_(ev) {}

    MzvEvaluator& base() { return ev_; }

    BigFloat reg_mzv(const IndexSet& L) {
        if (L.admissible()) return ev_.mzv(L);
        std::string key = "reg:" + L.to_string();
        if (auto hit = ev_.cache_get(key)) return *hit;

        WordCombo combo = reg_.regularize0(index_word(L));
        BigFloat acc = ev_.zero();
        for (const auto& [w, c] : combo.terms())
            acc += ev_.mzv(word_index(w)) * ev_.from_mpq(c);
        ev_.cache_put(key, acc);
        return acc;
    }

    BigFloat reg_word(const Word& w) { return reg_mzv(word_index(w)); }

    // Weight-w slice of the regularized depth-n generating function:
    // sum over ALL depth-n index sets of weight w.
    HPoly<BigFloat> gen_poly_reg(int depth, int weight) {
        if (depth < 1 || depth > 4) throw std::invalid_argument("gen_poly_reg: depth must be 1..4");
        if (weight < depth) throw std::invalid_argument("gen_poly_reg: weight below depth");
        HPoly<BigFloat> p(depth, weight - depth);
        for (const auto& L : enumerate_index_sets(depth, weight, false)) {
            ExpVec e;
            for (int part : L.parts) e.push_back(part - 1);
            p.add_term(std::move(e), reg_mzv(L));
        }
        return p;
    }

    Regularizer& regularizer() { return reg_; }

private:
    MzvEvaluator& ev_;
    Regularizer reg_;
};

} // namespace mzvkit

#endif
