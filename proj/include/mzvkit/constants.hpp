#ifndef MZVKIT_CONSTANTS_HPP
#define MZVKIT_CONSTANTS_HPP

#include "mzvkit/groupring.hpp"

#include <map>
#include <string>
#include <vector>

namespace mzvkit {
namespace constants {

// Fixed matrices and group-ring elements of the quadruple-zeta machinery.
// Everything below is data; the master element omega() is always assembled
// from the parts, never written out by hand.

inline IntMatrix P() {
    return IntMatrix(4, {1, 0, 0, 0, -1, 1, 0, 0, 0, -1, 1, 0, 0, 0, -1, 1});
}

inline IntMatrix Q() {
    return IntMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, -1, 1});
}

inline IntMatrix R() {
    return IntMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, 0, 1});
}

inline IntMatrix S() {
    return IntMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, -1, -1, -1, 1});
}

// Lower bidiagonal difference matrix: 1 on the diagonal, -1 below it.
inline IntMatrix P_n(int n) {
    IntMatrix m = IntMatrix::identity(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = -1;
    return m;
}

// Its inverse: lower-triangular all ones (cumulative sums).
inline IntMatrix P_bar_n(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.at(i, j) = 1;
    return m;
}

inline GroupRingElem Phi() {
    GroupRingElem g = GroupRingElem::identity(4);
    g.add_term(IntMatrix(4, {1, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1}), 1);
    g.add_term(IntMatrix(4, {1, 1, 1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 1, 1}), 1);
    return g;
}

inline GroupRingElem Psi() {
    GroupRingElem g = GroupRingElem::identity(4);
    g.add_term(IntMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1}), 1);
    g.add_term(IntMatrix(4, {1, 0, 0, 0, 0, 1, 1, 1, 0, 0, -1, -1, 0, 0, 1, 0}), 1);
    g.add_term(IntMatrix(4, {1, 1, 1, 1, 0, -1, -1, -1, 0, 1, 0, 0, 0, 0, 1, 0}), 1);
    return g;
}

// Rank-3 projector (0) (+) I_3; kills the first coordinate.
inline IntMatrix J() {
    return block_diag(IntMatrix(1, {0}), IntMatrix::identity(3));
}

inline IntMatrix T1() {
    return IntMatrix(4, {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1});
}

inline IntMatrix T2() {
    return IntMatrix(4, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1});
}

inline IntMatrix T3() {
    return IntMatrix(4, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0});
}

inline IntMatrix T4() {
    return IntMatrix(4, {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0});
}

// Degree-3 / degree-2 companions used by the double/triple identities.
inline IntMatrix Q3() { return IntMatrix(3, {1, 0, 0, -1, 1, 0, 0, 0, 1}); }
inline IntMatrix R3() { return IntMatrix(3, {1, 0, 0, 0, 1, 0, -1, -1, 1}); }

inline GroupRingElem Phi3() {
    GroupRingElem g = GroupRingElem::identity(3);
    g.add_term(IntMatrix(3, {1, 0, 0, 0, 1, 1, 0, 0, -1}), 1);
    return g;
}

inline Permutation perm4(const std::string& cycles) { return Permutation::from_cycles(cycles, 4); }

// Cyclic group <(1234)> = {id, (1234), (13)(24), (1432)}.
inline std::vector<Permutation> C4_elements() {
    return generated_group({perm4("(1234)")});
}

// The half-orbit {id, (1234)} (a subset, not a subgroup).
inline std::vector<Permutation> C4_star_elements() {
    return {Permutation(4), perm4("(1234)")};
}

inline std::vector<Permutation> C3_elements() {
    return generated_group({Permutation::from_cycles("(123)", 3)});
}

inline GroupRingElem S_of(const std::vector<Permutation>& h) { return group_sum(h); }
inline GroupRingElem S_C4() { return group_sum(C4_elements()); }
inline GroupRingElem S_C4_star() { return group_sum(C4_star_elements()); }
inline GroupRingElem S_sym(int n) { return group_sum(all_permutations(n)); }

inline GroupRingElem gr(const IntMatrix& m) { return GroupRingElem::of(m); }

// omega = P*S(Sym4) - (Psi*Phi*Q - Phi*R - Psi*S + I) * S(C4)
inline GroupRingElem omega() {
    GroupRingElem inner = Psi() * Phi() * gr(Q()) - Phi() * gr(R()) - Psi() * gr(S()) +
                          GroupRingElem::identity(4);
    return gr(P()) * S_sym(4) - inner * S_C4();
}

// Named table for dumps and spot checks.
inline std::map<std::string, IntMatrix> matrix_table() {
    std::map<std::string, IntMatrix> t;
    t.emplace("P", P());
    t.emplace("Q", Q());
    t.emplace("R", R());
    t.emplace("S", S());
    t.emplace("J", J());
    t.emplace("T1", T1());
    t.emplace("T2", T2());
    t.emplace("T3", T3());
    t.emplace("T4", T4());
    t.emplace("P2", P_n(2));
    t.emplace("P3", P_n(3));
    t.emplace("Pbar2", P_bar_n(2));
    t.emplace("Pbar3", P_bar_n(3));
    t.emplace("Pbar4", P_bar_n(4));
    t.emplace("Q3", Q3());
    t.emplace("R3", R3());
    return t;
}

inline std::map<std::string, GroupRingElem> element_table() {
    std::map<std::string, GroupRingElem> t;
    t.emplace("Phi", Phi());
    t.emplace("Psi", Psi());
    t.emplace("Phi3", Phi3());
    t.emplace("S(C4)", S_C4());
    t.emplace("S(C4*)", S_C4_star());
    t.emplace("S(Sym4)", S_sym(4));
    t.emplace("sh(1,2)", shuffle_element(1, 2));
    t.emplace("sh(2,3)", shuffle_element(2, 3));
    t.emplace("sh(3,4)", shuffle_element(3, 4));
    t.emplace("sh(2,4)", shuffle_element(2, 4));
    t.emplace("omega", omega());
    return t;
}

} // namespace constants
} // namespace mzvkit

#endif
