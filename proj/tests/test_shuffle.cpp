#include <catch2/catch_amalgamated.hpp>

#include "mzvkit/shuffle.hpp"

using namespace mzvkit;

TEST_CASE("shuffle product") {
    WordCombo xy = shuffle("X", "Y");
    CHECK(xy == WordCombo::of("XY") + WordCombo::of("YX"));

    // enumerate all three interleavings of Y with XY
    WordCombo yxy = shuffle("Y", "XY");
    CHECK(yxy == WordCombo::of("YXY") + WordCombo::of("XYY", 2));

    CHECK(shuffle("", "XYX") == WordCombo::of("XYX"));
    CHECK(shuffle("XY", "") == WordCombo::of("XY"));

    // commutative; total mass C(|u|+|v|, |u|)
    for (const auto& [u, v] : std::vector<std::pair<Word, Word>>{
             {"X", "XY"}, {"XY", "XY"}, {"XYY", "XY"}, {"YX", "XXY"}, {"XXY", "YYY"}}) {
        WordCombo s = shuffle(u, v);
        CHECK(s == shuffle(v, u));
        CHECK(s.total_mass() == binomial(static_cast<unsigned long>(u.size() + v.size()),
                                         static_cast<unsigned long>(u.size())));
        for (const auto& [w, c] : s.terms()) CHECK(w.size() == u.size() + v.size());
    }
}

TEST_CASE("regularization at T = 0") {
    Regularizer reg;

    CHECK(reg.regularize0("XY") == WordCombo::of("XY"));
    CHECK(reg.regularize0("Y").is_zero());
    CHECK(reg.regularize0("YYY").is_zero());

    // Y XY = shuffle(Y, XY) - 2 XYY and the product term vanishes at T = 0
    CHECK(reg.regularize0("YXY") == WordCombo::of("XYY", -2));

    CHECK_THROWS_AS(reg.regularize0("YX"), std::invalid_argument);
    CHECK_THROWS_AS(reg.regularize0(""), std::invalid_argument);

    // outputs are admissible and weight-preserving; idempotent on them
    for (int w = 2; w <= 8; ++w)
        for (int d = 1; d < w; ++d)
            for (const auto& L : enumerate_index_sets(d, w, false)) {
                WordCombo combo = reg.regularize0(index_word(L));
                for (const auto& [word, c] : combo.terms()) {
                    CHECK(word_admissible(word));
                    CHECK(static_cast<int>(word.size()) == w);
                    CHECK(reg.regularize0(word) == WordCombo::of(word));
                }
            }
}

TEST_CASE("regularized numeric values") {
    MzvEvaluator ev(50);
    RegEvaluator reg(ev);
    mpfr_prec_t bits = ev.bits();
    BigFloat tol = BigFloat::pow10(-45, bits);

    // admissible passthrough + Euler identity
    CHECK((reg.reg_mzv(IndexSet{2, 1}) - ev.zeta(3)).abs() < tol);

    CHECK(reg.reg_mzv(IndexSet{1}).is_zero());

    // frozen reference: -2 zeta(3)
    BigFloat m2z3 = BigFloat::from_string(
        "-2.40411380631918857079947632302289998152997258468099776358454", bits);
    CHECK((reg.reg_mzv(IndexSet{1, 2}) - m2z3).abs() < tol);
}

TEST_CASE("shuffle homomorphism at T = 0") {
    MzvEvaluator ev(50);
    RegEvaluator reg(ev);
    BigFloat tol = BigFloat::pow10(-40, ev.bits());

    // reg(u) * reg(v) = sum of reg over the shuffle of u and v,
    // for all index-set words of total weight <= 8
    std::vector<Word> words;
    for (int w = 1; w <= 4; ++w)
        for (int d = 1; d <= w; ++d)
            for (const auto& L : enumerate_index_sets(d, w, false)) words.push_back(index_word(L));

    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 8) continue;
            BigFloat lhs = reg.reg_word(u) * reg.reg_word(v);
            BigFloat rhs = ev.zero();
            for (const auto& [w, c] : shuffle(u, v).terms()) rhs += reg.reg_word(w) * ev.from_mpq(c);
            INFO(u << " sh " << v);
            CHECK((lhs - rhs).abs() < tol);
        }
}

TEST_CASE("regularized generating slices") {
    MzvEvaluator ev(40);
    RegEvaluator reg(ev);
    mpfr_prec_t bits = ev.bits();
    BigFloat tol = BigFloat::pow10(-35, bits);

    // depth 1: weight 1 slice is zero, weight l >= 2 is zeta(l) x^{l-1}
    CHECK(reg.gen_poly_reg(1, 1).is_zero());
    for (int l = 2; l <= 6; ++l) {
        HPoly<BigFloat> s = reg.gen_poly_reg(1, l);
        REQUIRE(s.terms().size() == 1);
        CHECK((s.coeff({l - 1}) - ev.zeta(l)).abs() < tol);
    }

    // depth 4, weight 5: all four sets, the x1-monomial carries zeta(2,1,1,1)
    HPoly<BigFloat> s45 = reg.gen_poly_reg(4, 5);
    CHECK(s45.terms().size() == 4);
    CHECK((s45.coeff({1, 0, 0, 0}) - ev.mzv(IndexSet{2, 1, 1, 1})).abs() < tol);
    CHECK(enumerate_index_sets(4, 5, false).size() == 4);
}
