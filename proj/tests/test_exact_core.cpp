#include <catch2/catch_amalgamated.hpp>

#include "mzvkit/constants.hpp"
#include "mzvkit/veccombo.hpp"

using namespace mzvkit;
namespace cc = mzvkit::constants;

TEST_CASE("matrix product and inverse") {
    IntMatrix I4 = IntMatrix::identity(4);
    CHECK(I4 * cc::P() == cc::P());

    // P is the difference matrix; its inverse is the cumulative-sum matrix.
    CHECK(cc::P() * cc::P_bar_n(4) == I4);
    CHECK(mat_inv(cc::P_n(4)) == cc::P_bar_n(4));
    CHECK(mat_inv(I4) == I4);

    CHECK_THROWS_AS(mat_inv(cc::J()), NonUnimodular);
    try {
        mat_inv(cc::J());
    } catch (const NonUnimodular& e) {
        CHECK(e.det == 0);
    }

    IntMatrix a(2, {3, 1, 2, 1});
    CHECK(a.det() == 1);
    CHECK(a * mat_inv(a) == IntMatrix::identity(2));
}

TEST_CASE("third summand of Psi times S appears in the Psi*S expansion") {
    IntMatrix third(4, {1, 0, 0, 0, 0, 1, 1, 1, 0, 0, -1, -1, 0, 0, 1, 0});
    IntMatrix expect(4, {1, 0, 0, 0, -1, 0, 0, 1, 1, 1, 0, -1, 0, 0, 1, 0});
    CHECK(third * cc::S() == expect);
    CHECK((cc::Psi() * cc::gr(cc::S())).coeff(expect) == 1);
}

TEST_CASE("permutation to matrix") {
    CHECK(perm_to_matrix(Permutation(4)) == IntMatrix::identity(4));

    IntMatrix m1324 = perm_to_matrix(cc::perm4("(13)(24)"));
    CHECK(m1324 == IntMatrix(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));

    // group homomorphism, exhaustively over Sym4 x Sym4
    auto s4 = all_permutations(4);
    REQUIRE(s4.size() == 24);
    for (const auto& s : s4)
        for (const auto& t : s4)
            CHECK(perm_to_matrix(s * t) == perm_to_matrix(s) * perm_to_matrix(t));

    // injectivity
    for (size_t i = 0; i < s4.size(); ++i)
        for (size_t j = i + 1; j < s4.size(); ++j)
            CHECK_FALSE(perm_to_matrix(s4[i]) == perm_to_matrix(s4[j]));
}

TEST_CASE("cycle notation convention (1234): 1->2->3->4->1") {
    Permutation p = cc::perm4("(1234)");
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 4);
    CHECK(p(4) == 1);
    CHECK(p.to_cycles() == "(1234)");
    CHECK_THROWS(Permutation::from_cycles("(12)(23)", 4));
}

TEST_CASE("group sums") {
    CHECK(group_sum({Permutation(4)}) == GroupRingElem::identity(4));

    GroupRingElem c4 = cc::S_C4();
    CHECK(c4.support_size() == 4);
    for (const char* cyc : {"id", "(1234)", "(13)(24)", "(1432)"})
        CHECK(c4.coeff(perm_to_matrix(cc::perm4(cyc))) == 1);

    CHECK(cc::S_sym(4).support_size() == 24);
}

TEST_CASE("group ring arithmetic") {
    GroupRingElem psi_s = cc::Psi() * cc::gr(cc::S());
    CHECK(psi_s.support_size() == 4);
    for (const auto& [m, c] : psi_s.terms()) CHECK(c == 1);

    GroupRingElem psi_phi_q = cc::Psi() * cc::Phi() * cc::gr(cc::Q());
    CHECK(psi_phi_q.support_size() == 12);
    for (const auto& [m, c] : psi_phi_q.terms()) CHECK(c == 1);

    GroupRingElem gamma = cc::omega();
    CHECK(gamma * GroupRingElem::identity(4) == gamma);

    // cancellation keeps elements canonical
    CHECK((gamma - gamma).is_zero());
    CHECK(gamma.scaled(0).is_zero());
}

TEST_CASE("bar operator") {
    CHECK(gr_bar(GroupRingElem::identity(4)) == GroupRingElem::identity(4));
    CHECK(gr_bar(cc::Phi() * cc::gr(cc::R())).support_size() == 3);

    // anti-homomorphism and involution on unimodular-supported elements
    GroupRingElem a = cc::Psi() * cc::gr(cc::S());
    GroupRingElem b = cc::Phi() * cc::gr(cc::Q());
    CHECK(gr_bar(a * b) == gr_bar(b) * gr_bar(a));
    CHECK(gr_bar(gr_bar(a)) == a);
    CHECK(gr_bar(gr_bar(cc::omega())) == cc::omega());

    GroupRingElem with_j = cc::gr(cc::J());
    CHECK_THROWS_AS(gr_bar(with_j), NonUnimodular);
}

TEST_CASE("shuffle elements") {
    GroupRingElem sh12 = shuffle_element(1, 2);
    CHECK(sh12.support_size() == 2);
    CHECK(sh12.coeff(perm_to_matrix(Permutation(2))) == 1);
    CHECK(sh12.coeff(perm_to_matrix(Permutation::from_cycles("(12)", 2))) == 1);

    GroupRingElem sh34 = shuffle_element(3, 4);
    CHECK(sh34.support_size() == 4);
    for (const char* cyc : {"id", "(34)", "(234)", "(1234)"})
        CHECK(sh34.coeff(perm_to_matrix(cc::perm4(cyc))) == 1);

    CHECK(shuffle_element(2, 4).support_size() == 6);

    // term count is C(n, j)
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j < n; ++j) {
            CHECK(shuffle_element(j, n).support_size() ==
                  static_cast<size_t>(binomial(static_cast<unsigned long>(n),
                                               static_cast<unsigned long>(j)).get_ui()));
        }

    CHECK_THROWS(shuffle_element(0, 4));
    CHECK_THROWS(shuffle_element(4, 4));
}

TEST_CASE("embedding into a larger degree") {
    CHECK(embed(GroupRingElem::identity(3), 4) == GroupRingElem::identity(4));

    GroupRingElem e23 = embed(shuffle_element(2, 3), 4);
    CHECK(e23.support_size() == 3);
    for (const char* cyc : {"id", "(23)", "(123)"})
        CHECK(e23.coeff(perm_to_matrix(cc::perm4(cyc))) == 1);

    // <(12)> x <(34)> inside Sym4 has 4 elements
    GroupRingElem left = embed(group_sum(generated_group({Permutation::from_cycles("(12)", 2)})), 4);
    GroupRingElem right = group_sum(generated_group({cc::perm4("(34)")}));
    CHECK((left * right).support_size() == 4);
    CHECK(left * right == group_sum(generated_group({cc::perm4("(12)"), cc::perm4("(34)")})));
}

TEST_CASE("block diagonal") {
    CHECK(block_diag(IntMatrix(1, {0}), IntMatrix::identity(3)) == cc::J());
    CHECK(block_diag(cc::P_bar_n(2), cc::P_bar_n(2)) ==
          IntMatrix(4, {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1}));
    CHECK(block_diag(IntMatrix::identity(2), IntMatrix::identity(2)) == IntMatrix::identity(4));

    // inverse distributes over blocks when both parts are unimodular
    IntMatrix ab = block_diag(cc::P_n(2), cc::P_n(2));
    CHECK(mat_inv(ab) == block_diag(cc::P_bar_n(2), cc::P_bar_n(2)));
}

TEST_CASE("vector action") {
    VecCombo e1000 = VecCombo::of(vec4(1, 0, 0, 0));
    VecCombo orbit = vec_act(e1000, cc::S_C4());
    VecCombo expect = VecCombo::of(vec4(1, 0, 0, 0)) + VecCombo::of(vec4(0, 1, 0, 0)) +
                      VecCombo::of(vec4(0, 0, 1, 0)) + VecCombo::of(vec4(0, 0, 0, 1));
    CHECK(orbit == expect);

    VecCombo e1111 = VecCombo::of(vec4(1, 1, 1, 1));
    CHECK(vec_act(e1111, cc::S_C4()) == e1111.scaled(4));

    VecCombo mixed = VecCombo::of(vec4(2, -1, 0, 3), rat(5, 2)) + VecCombo::of(vec4(1, 1, 0, 0));
    CHECK(vec_act(mixed, GroupRingElem::identity(4)) == mixed);

    // associativity with ring multiplication
    GroupRingElem g1 = cc::Psi(), g2 = cc::gr(cc::S()) * cc::S_C4();
    CHECK(vec_act(vec_act(mixed, g1), g2) == vec_act(mixed, g1 * g2));
}

TEST_CASE("congruence reduction") {
    CHECK(congruence_reduce(VecCombo::of(vec4(0, 1, 2, 1))).is_zero());

    VecCombo x = VecCombo::of(vec4(1, 0, 1, 0), 2) + VecCombo::of(vec4(0, 1, 0, 1), 3);
    CHECK(congruence_reduce(x) == VecCombo::of(vec4(1, 0, 1, 0), 2));

    VecCombo pos = VecCombo::of(vec4(1, 2, 3, 4)) + VecCombo::of(vec4(2, 0, 0, 1), rat(-7, 3));
    CHECK(congruence_reduce(pos) == pos);

    // idempotent and linear
    CHECK(congruence_reduce(congruence_reduce(x)) == congruence_reduce(x));
    VecCombo y = VecCombo::of(vec4(0, 5, 5, 5), rat(1, 7)) + VecCombo::of(vec4(3, 1, 1, 1));
    CHECK(congruence_reduce(x + y) == congruence_reduce(x) + congruence_reduce(y));
}

TEST_CASE("row-sum vectors") {
    IntMatrix pbar = cc::P_bar_n(4);
    CHECK(vmp(pbar, {2}) == vec4(1, 1, 0, 0));
    CHECK(vmp(pbar, {1, 2}) == vec4(2, 1, 0, 0));
    CHECK(vmp(pbar, {1, 2, 4}) == vec4(3, 2, 1, 1));
    CHECK(vmp(IntMatrix::identity(4), {1, 3}) == vec4(1, 0, 1, 0));
}

TEST_CASE("fixed constants") {
    CHECK(cc::P().det() == 1);
    CHECK(cc::Q().det() == 1);
    CHECK(cc::R().det() == 1);
    CHECK(cc::S().det() == 1);

    CHECK(cc::Phi().support_size() == 3);
    CHECK(cc::Psi().support_size() == 4);

    CHECK(cc::J() * cc::J() == cc::J());

    for (const auto& [name, m] : cc::matrix_table()) {
        if (name == "J" || name[0] == 'T') continue;
        INFO(name);
        CHECK(m.is_unimodular());
    }
}
