#ifndef MZVKIT_MZV_HPP
#define MZVKIT_MZV_HPP

#include "mzvkit/polylog.hpp"
#include "mzvkit/poly.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mzvkit {

constexpr int kMaxWeight = 24;

// Tail of the integer power sum: sum_{m > n} m^{-s}, plus a bound on the
// error of that estimate. Explicit summation for 64 terms, then
// Euler-Maclaurin.
struct ZetaTail {
    BigFloat value;
    BigFloat err;
};

inline ZetaTail zeta_tail(int s, long n, mpfr_prec_t bits) {
    if (s < 2) throw std::invalid_argument("zeta_tail: need exponent >= 2");
    BigFloat acc(bits);
    const long a = n + 65;
    for (long m = n + 1; m < a; ++m)
        acc += BigFloat::from_long(m, bits).pow_si(-s);

    BigFloat af = BigFloat::from_long(a, bits);
    // integral term a^{1-s}/(s-1), then the standard corrections
    BigFloat em = af.pow_si(1 - s) / BigFloat::from_long(s - 1, bits);
    em += af.pow_si(-s) / BigFloat::from_long(2, bits);
    BigFloat d1 = af.pow_si(-s - 1);
    d1.mul_si(s);
    d1.div_ui(12);
    em += d1;
    BigFloat d3 = af.pow_si(-s - 3);
    d3.mul_si(static_cast<long>(s) * (s + 1) * (s + 2));
    d3.div_ui(720);
    em -= d3;

    BigFloat rem = af.pow_si(-s - 5);
    rem.mul_si(static_cast<long>(s) * (s + 1) * (s + 2) * (s + 3) * (s + 4));
    rem.div_ui(30240);
    rem.mul_si(2);  // headroom over the first omitted term

    return {acc + em, rem};
}

struct BruteForceResult {
    BigFloat value;    // partial sum plus the tail correction
    BigFloat partial;  // raw truncated nested sum
    BigFloat bound;    // conservative: covers |truth - value| and |truth - partial|
};

// Direct nested summation m_1 > m_2 > ... > m_k >= 1 truncated at
// m_1 <= terms, via cumulative inner prefix sums (cost O(terms * depth)).
// Independent of the convolution engine; used as its oracle.
inline BruteForceResult mzv_bruteforce(const IndexSet& L, long terms, int digits = 50) {
    if (!L.admissible()) throw std::invalid_argument("mzv_bruteforce: index set must be admissible");
    if (terms < 1) throw std::invalid_argument("mzv_bruteforce: need at least one term");
    mpfr_prec_t bits = BigFloat::bits_for_digits(digits + 10);
    const int k = L.depth();
    const long N = terms;

    // prefix[i][n] = sum over m_i <= n of m_i^{-l_i} * prefix_{i+1}[m_i - 1]
    std::vector<BigFloat> prev;  // level below the one being built
    std::vector<BigFloat> cur(static_cast<size_t>(N) + 1, BigFloat(bits));
    std::vector<BigFloat> outer_next;  // prefix of level 2, kept for the tail
    for (int i = k; i >= 1; --i) {
        std::vector<BigFloat> built(static_cast<size_t>(N) + 1, BigFloat(bits));
        BigFloat run(bits);
        for (long n = 1; n <= N; ++n) {
            BigFloat t = BigFloat::from_long(n, bits).pow_si(-L.parts[static_cast<size_t>(i - 1)]);
            if (i < k) t *= prev[static_cast<size_t>(n - 1)];
            run += t;
            built[static_cast<size_t>(n)] = run;
        }
        if (i == 2) outer_next = built;
        prev = std::move(built);
    }

    BigFloat partial = prev[static_cast<size_t>(N)];
    BigFloat inner_at_n = (k >= 2) ? outer_next[static_cast<size_t>(N)] : BigFloat::from_long(1, bits);
    BigFloat inner_growth(bits);
    if (k >= 2) inner_growth = outer_next[static_cast<size_t>(N)] - outer_next[static_cast<size_t>(N / 2)];

    ZetaTail tail = zeta_tail(L.parts[0], N, bits);
    BigFloat correction = inner_at_n * tail.value;
    BigFloat value = partial + correction;

    // The inner partial sum only grows beyond the horizon; its growth over
    // the last half-interval, extrapolated geometrically, dominates the
    // residual. Reporting the correction itself keeps the bound valid for
    // the raw partial sum as well.
    BigFloat residual = inner_growth * tail.value;
    residual.mul_si(3);
    BigFloat bound = correction.abs() + residual.abs() + tail.err * inner_at_n +
                     value.abs() * BigFloat::pow10(-digits + 5, bits);
    return {value, partial, bound};
}

// High-precision evaluator: convolution of [0,1/2] iterated integrals.
// Splitting a weight-n word at every position writes zeta(L) as
//   sum_{j=0..n} F_{tau(reverse(prefix_j))}(1/2) * F_{suffix_j}(1/2),
// where tau swaps X and Y. Both factors converge geometrically.
// Thread-safe; duplicate computation is harmless, results are memoized.
class MzvEvaluator {
public:
    explicit MzvEvaluator(int digits = 50) : digits_(digits), bits_(BigFloat::bits_for_digits(digits + 10)) {
        if (digits < 10) throw std::invalid_argument("MzvEvaluator: need at least 10 digits");
    }

    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return bits_; }

    BigFloat zero() const { return BigFloat(bits_); }
    BigFloat from_mpq(const mpq_class& q) const { return BigFloat::from_mpq(q, bits_); }

    BigFloat mzv(const IndexSet& L) {
        if (!L.admissible())
            throw std::invalid_argument("mzv: index set (" + L.to_string() +
                                        ") is not admissible; use the regularized evaluator");
        if (L.weight() > kMaxWeight)
            throw std::invalid_argument("mzv: weight exceeds the practical cap");
        std::string key = L.to_string();
        if (auto hit = cache_get(key)) return *hit;

        Word w = index_word(L);
        const int n = static_cast<int>(w.size());
        BigFloat acc(bits_);
        for (int j = 0; j <= n; ++j) {
            Word pre = w.substr(0, static_cast<size_t>(j));
            std::reverse(pre.begin(), pre.end());
            Word left = word_tau(pre);
            Word right = w.substr(static_cast<size_t>(j));
            acc += polylog_memo(left) * polylog_memo(right);
        }
        cache_put(key, acc);
        return acc;
    }

    BigFloat zeta(int l) { return mzv(IndexSet{l}); }

    // Weight-w slice of the admissible depth-n generating function:
    // sum over admissible L of zeta(L) x^{L-1}.
    HPoly<BigFloat> gen_poly_adm(int depth, int weight) {
        HPoly<BigFloat> p(depth, weight - depth);
        for (const auto& L : enumerate_index_sets(depth, weight, true)) {
            ExpVec e;
            for (int part : L.parts) e.push_back(part - 1);
            p.add_term(std::move(e), mzv(L));
        }
        return p;
    }

    HPoly<BigFloat> gen_poly_qzv(int weight) {
        if (weight < 5) throw std::invalid_argument("gen_poly_qzv: weight must be at least 5");
        return gen_poly_adm(4, weight);
    }

    // Weight-w slice of the target series: zeta(w) times the full composition
    // fan over `depth` positive parts.
    HPoly<BigFloat> gen_poly_target(int weight, int depth) {
        if (weight <= depth) throw std::invalid_argument("gen_poly_target: weight must exceed depth");
        BigFloat z = zeta(weight);
        HPoly<BigFloat> p(depth, weight - depth);
        for (const auto& L : enumerate_index_sets(depth, weight, false)) {
            ExpVec e;
            for (int part : L.parts) e.push_back(part - 1);
            p.add_term(std::move(e), z);
        }
        return p;
    }

    // ---- shared value cache (also used by the regularized evaluator) ----

    std::optional<BigFloat> cache_get(const std::string& key) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    void cache_put(const std::string& key, const BigFloat& v) {
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = values_.emplace(key, v);
        if (inserted && sink_.is_open()) {
            sink_ << key << '\t' << digits_ << '\t' << v.to_string(digits_ + 5) << '\n';
            sink_.flush();
        }
    }

    size_t cache_size() const {
        std::lock_guard<std::mutex> lk(mu_);
        return values_.size();
    }

    // One record per line: "l1,...,lk<TAB>digits<TAB>decimal-value".
    // Records computed at other precisions are ignored. Subsequent new
    // values are appended to the same file.
    void attach_cache_file(const std::string& path) {
        std::lock_guard<std::mutex> lk(mu_);
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream is(line);
            std::string key, dig, val;
            if (!std::getline(is, key, '\t') || !std::getline(is, dig, '\t') || !std::getline(is, val))
                continue;
            try {
                if (std::stoi(dig) != digits_) continue;
                values_.emplace(key, BigFloat::from_string(val, bits_));
            } catch (const std::exception&) {
                continue;  // malformed record; skip
            }
        }
        in.close();
        sink_.open(path, std::ios::app);
    }

private:
    BigFloat polylog_memo(const Word& w) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = polylogs_.find(w);
            if (it != polylogs_.end()) return it->second;
        }
        BigFloat v = polylog_half(w, digits_ + 6);
        std::lock_guard<std::mutex> lk(mu_);
        return polylogs_.emplace(w, std::move(v)).first->second;
    }

    int digits_;
    mpfr_prec_t bits_;
    mutable std::mutex mu_;
    std::map<std::string, BigFloat> values_;
    std::map<Word, BigFloat> polylogs_;
    std::ofstream sink_;
};

} // namespace mzvkit

#endif
