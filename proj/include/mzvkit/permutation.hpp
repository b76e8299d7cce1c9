#ifndef MZVKIT_PERMUTATION_HPP
#define MZVKIT_PERMUTATION_HPP

#include "mzvkit/matrix.hpp"

#include <vector>
#include <string>
#include <numeric>
#include <algorithm>
#include <stdexcept>

namespace mzvkit {

// Permutation of {1..n}, stored as the image array sigma(1..n).
class Permutation {
public:
    explicit Permutation(int degree) : img_(static_cast<size_t>(degree)) {
        std::iota(img_.begin(), img_.end(), 1);
    }

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("Permutation: image array is not a bijection");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }

    // Cycle notation with the convention (1234): 1->2->3->4->1.
    // Accepts products of cycles, e.g. "(13)(24)"; "id" or "" is the identity.
    static Permutation from_cycles(const std::string& s, int degree) {
        Permutation p(degree);
        if (s.empty() || s == "id" || s == "e") return p;
        size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(') throw std::invalid_argument("Permutation: expected '(' in \"" + s + "\"");
            size_t close = s.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("Permutation: unbalanced cycle in \"" + s + "\"");
            std::vector<int> cyc;
            for (size_t j = i + 1; j < close; ++j) {
                char c = s[j];
                if (c == ' ' || c == ',') continue;
                if (c < '1' || c > '8')
                    throw std::invalid_argument("Permutation: bad point '" + std::string(1, c) + "'");
                cyc.push_back(c - '0');
            }
            for (size_t j = 0; j < cyc.size(); ++j) {
                int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
                if (from > degree || to > degree)
                    throw std::invalid_argument("Permutation: point exceeds degree");
                p.img_[static_cast<size_t>(from - 1)] = to;
            }
            i = close + 1;
        }
        // Cycle factors above must be disjoint for direct assignment: verify.
        std::vector<bool> seen(p.img_.size(), false);
        for (int v : p.img_) {
            if (seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("Permutation: cycles are not disjoint in \"" + s + "\"");
            seen[static_cast<size_t>(v - 1)] = true;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    // (p * q)(i) = p(q(i))
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
        std::vector<int> img(static_cast<size_t>(p.degree()));
        for (int i = 1; i <= p.degree(); ++i) img[static_cast<size_t>(i - 1)] = p(q(i));
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int i = 1; i <= degree(); ++i) img[static_cast<size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(img));
    }

    // Extend by fixed points degree+1 .. n.
    Permutation extended(int n) const {
        if (n < degree()) throw std::invalid_argument("Permutation: cannot shrink degree");
        std::vector<int> img = img_;
        for (int i = degree() + 1; i <= n; ++i) img.push_back(i);
        return Permutation(std::move(img));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string to_cycles() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 1; i <= degree(); ++i) {
            if (seen[static_cast<size_t>(i - 1)] || (*this)(i) == i) continue;
            out += '(';
            int j = i;
            do {
                seen[static_cast<size_t>(j - 1)] = true;
                out += std::to_string(j);
                j = (*this)(j);
            } while (j != i);
            out += ')';
        }
        return out.empty() ? "id" : out;
    }

private:
    std::vector<int> img_;
};

// sigma -> (delta_{i,sigma(j)}): entry (i,j) = 1 iff i = sigma(j).
inline IntMatrix perm_to_matrix(const Permutation& s) {
    IntMatrix m(s.degree());
    for (int j = 1; j <= s.degree(); ++j) m.at(s(j) - 1, j - 1) = 1;
    return m;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Subgroup (or coset list) generated by the given elements.
inline std::vector<Permutation> generated_group(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw std::invalid_argument("generated_group: no generators");
    std::vector<Permutation> elems{Permutation(gens.front().degree())};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : gens)
            for (size_t i = 0; i < elems.size(); ++i) {
                Permutation cand = elems[i] * g;
                if (std::find(elems.begin(), elems.end(), cand) == elems.end()) {
                    elems.push_back(cand);
                    grew = true;
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace mzvkit

#endif
