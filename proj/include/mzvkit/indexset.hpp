#ifndef MZVKIT_INDEXSET_HPP
#define MZVKIT_INDEXSET_HPP

#include <string>
#include <vector>
#include <sstream>
#include <stdexcept>

namespace mzvkit {

// Index set (l_1, ..., l_k) of positive integers. Admissible (l_1 >= 2)
// index sets are exactly the convergent ones.
struct IndexSet {
    std::vector<int> parts;

    IndexSet() = default;
    IndexSet(std::initializer_list<int> l) : parts(l) { validate(); }
    explicit IndexSet(std::vector<int> l) : parts(std::move(l)) { validate(); }

    void validate() const {
        if (parts.empty()) throw std::invalid_argument("IndexSet: empty");
        for (int p : parts)
            if (p < 1) throw std::invalid_argument("IndexSet: parts must be positive");
    }

    int depth() const { return static_cast<int>(parts.size()); }

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }

    bool admissible() const { return parts.front() >= 2; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.parts == b.parts; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.parts < b.parts; }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        return os.str();
    }

    // "2,1,1,1" -> (2,1,1,1)
    static IndexSet parse(const std::string& s) {
        std::vector<int> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("IndexSet: bad part \"" + tok + "\"");
            }
            if (pos != tok.size() || v < 1)
                throw std::invalid_argument("IndexSet: bad part \"" + tok + "\"");
            parts.push_back(v);
        }
        return IndexSet(std::move(parts));
    }
};

// Two-letter encoding over {X, Y}: (l_1,...,l_k) <-> X^{l_1-1} Y ... X^{l_k-1} Y.
// A word of an index set always ends in Y; it is admissible iff it starts with X.
using Word = std::string;

inline Word index_word(const IndexSet& L) {
    Word w;
    for (int p : L.parts) {
        w.append(static_cast<size_t>(p - 1), 'X');
        w.push_back('Y');
    }
    return w;
}

inline IndexSet word_index(const Word& w) {
    if (w.empty() || w.back() != 'Y')
        throw std::invalid_argument("word_index: word must end in Y");
    std::vector<int> parts;
    int run = 0;
    for (char c : w) {
        if (c == 'X') {
            ++run;
        } else if (c == 'Y') {
            parts.push_back(run + 1);
            run = 0;
        } else {
            throw std::invalid_argument("word_index: alphabet is {X, Y}");
        }
    }
    return IndexSet(std::move(parts));
}

inline bool word_admissible(const Word& w) { return !w.empty() && w.front() == 'X'; }

// Letter swap X <-> Y.
inline Word word_tau(const Word& w) {
    Word r = w;
    for (char& c : r) c = (c == 'X') ? 'Y' : 'X';
    return r;
}

// All index sets of the given depth and weight, lexicographically sorted.
inline std::vector<IndexSet> enumerate_index_sets(int depth, int weight, bool admissible_only) {
    std::vector<IndexSet> out;
    if (depth < 1 || weight < depth) return out;
    std::vector<int> cur(static_cast<size_t>(depth), 1);
    // walk compositions of `weight` into `depth` positive parts in lex order
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == depth - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            if (!admissible_only || cur[0] >= 2) out.push_back(IndexSet(cur));
            return;
        }
        for (int v = 1; v <= remaining - (depth - 1 - pos); ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, weight);
    return out;
}

} // namespace mzvkit

#endif
