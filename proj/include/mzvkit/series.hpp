#ifndef MZVKIT_SERIES_HPP
#define MZVKIT_SERIES_HPP

#include "mzvkit/constants.hpp"
#include "mzvkit/poly.hpp"

#include <map>
#include <stdexcept>

namespace mzvkit {

// Power series truncated at total degree `cutoff`, stored as homogeneous
// parts. Missing parts are zero. Since every operation here preserves
// degree, truncation introduces no error below the cutoff.
template <class C>
class TruncSeries {
public:
    TruncSeries() : nvars_(0), cutoff_(-1) {}
    TruncSeries(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {
        if (nvars < 1 || nvars > kMaxOrder) throw std::invalid_argument("TruncSeries: bad nvars");
        if (cutoff < 0) throw std::invalid_argument("TruncSeries: negative cutoff");
    }

    int nvars() const { return nvars_; }
    int cutoff() const { return cutoff_; }

    HPoly<C> part(int d) const {
        auto it = parts_.find(d);
        return it == parts_.end() ? HPoly<C>(nvars_, d) : it->second;
    }

    bool has_part(int d) const { return parts_.count(d) != 0; }

    void set_part(HPoly<C> p) {
        if (p.nvars() != nvars_) throw std::invalid_argument("TruncSeries: nvars mismatch");
        if (p.degree() > cutoff_) throw std::invalid_argument("TruncSeries: part beyond cutoff");
        if (p.is_zero())
            parts_.erase(p.degree());
        else
            parts_.insert_or_assign(p.degree(), std::move(p));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("TruncSeries: nvars mismatch");
        TruncSeries r(a.nvars_, std::min(a.cutoff_, b.cutoff_));
        for (int d = 0; d <= r.cutoff_; ++d) r.set_part(a.part(d) + b.part(d));
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("TruncSeries: nvars mismatch");
        TruncSeries r(a.nvars_, std::min(a.cutoff_, b.cutoff_));
        for (int d = 0; d <= r.cutoff_; ++d) r.set_part(a.part(d) - b.part(d));
        return r;
    }

    TruncSeries scaled_q(const mpq_class& q) const {
        TruncSeries r(nvars_, cutoff_);
        for (const auto& [d, p] : parts_) r.set_part(p.scaled_q(q));
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.nvars_ == b.nvars_ && a.cutoff_ == b.cutoff_ && a.parts_ == b.parts_;
    }

private:
    int nvars_;
    int cutoff_;
    std::map<int, HPoly<C>> parts_;
};

// Product on disjoint variable blocks: exponent vectors concatenate.
template <class C>
HPoly<C> tensor_slice(const HPoly<C>& a, const HPoly<C>& b) {
    HPoly<C> r(a.nvars() + b.nvars(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExpVec e = ea;
            e.insert(e.end(), eb.begin(), eb.end());
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

// (f (x) g)(x_1..x_{n1+n2}) = f(first block) * g(second block).
template <class C>
TruncSeries<C> tensor(const TruncSeries<C>& f, const TruncSeries<C>& g) {
    TruncSeries<C> r(f.nvars() + g.nvars(), std::min(f.cutoff(), g.cutoff()));
    for (int d = 0; d <= r.cutoff(); ++d) {
        HPoly<C> acc(r.nvars(), d);
        for (int i = 0; i <= d; ++i) {
            if (!f.has_part(i) || !g.has_part(d - i)) continue;
            acc = acc + tensor_slice(f.part(i), g.part(d - i));
        }
        r.set_part(std::move(acc));
    }
    return r;
}

// Degree-preserving, so the action applies slice by slice.
template <class C>
TruncSeries<C> act_series(const TruncSeries<C>& f, const GroupRingElem& gamma) {
    TruncSeries<C> r(f.nvars(), f.cutoff());
    for (int d = 0; d <= f.cutoff(); ++d)
        if (f.has_part(d)) r.set_part(act(f.part(d), gamma));
    return r;
}

// f#(x_1,...,x_n) = f(x_1+...+x_n, x_2+...+x_n, ..., x_n), i.e. the action
// of the difference matrix P_n.
template <class C>
TruncSeries<C> sharp(const TruncSeries<C>& f) {
    return act_series(f, GroupRingElem::of(constants::P_n(f.nvars())));
}

template <class C>
HPoly<C> sharp_slice(const HPoly<C>& p) {
    return act(p, GroupRingElem::of(constants::P_n(p.nvars())));
}

} // namespace mzvkit

#endif
