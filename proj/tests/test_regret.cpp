#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rax/regret.hpp"
#include "test_support.hpp"

using namespace rax;
using rax::testing::q;

namespace {

SimpleRandomVariable on_halves(const Rational& left, const Rational& right) {
    return SimpleRandomVariable({{left, Event::interval(q(0), q(1, 2))},
                                 {right, Event::interval(q(1, 2), q(1))}});
}

const std::vector<Rational> kGrid{q(0), q(1, 4), q(1, 2), q(3, 4), q(1)};

RegretLottery oracle_lottery(const RegretFunction& psi, const SimpleRandomVariable& x,
                             const SimpleRandomVariable& y) {
    // Assemble (psi, length) pairs straight off the elementary intervals
    // between the pooled breakpoints; no refinement machinery involved.
    const auto points = rax::testing::state_breakpoints(x, &y);
    std::vector<std::pair<Rational, Rational>> entries;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const Rational mid = (points[i] + points[i + 1]) / 2;
        entries.emplace_back(psi.evaluate(x.value_at(mid), y.value_at(mid)),
                             points[i + 1] - points[i]);
    }
    return RegretLottery(std::move(entries));
}

}  // namespace

TEST_CASE("difference regret") {
    const auto psi = difference_regret();
    CHECK(psi.evaluate(q(3, 4), q(1, 4)) == q(1, 2));
    CHECK(psi.evaluate(q(2, 7), q(2, 7)) == 0);
    CHECK(psi.evaluate(q(0), q(1)) == q(-1));
}

TEST_CASE("validator accepts difference and names the grid") {
    for (int points : {3, 5, 101}) {
        const auto report = validate_regret_function(difference_regret(), {}, points);
        CHECK(report.passed);
        CHECK(report.violations.empty());
        CHECK(report.grid_points == points);
    }
}

TEST_CASE("validator rejects the sign flip on both axes") {
    const auto report = validate_regret_function(negated_difference_regret(), {}, 5);
    CHECK_FALSE(report.passed);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].check == PsiCheck::increasing_in_first);
    CHECK(report.violations[1].check == PsiCheck::decreasing_in_second);
}

TEST_CASE("validator rejects the diagonal offset") {
    const auto report = validate_regret_function(offset_difference_regret(), {}, 5);
    CHECK_FALSE(report.passed);
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations[0];
    CHECK(v.check == PsiCheck::diagonal_zero);
    CHECK(v.x1 == 0);
    CHECK(v.value1 == 1);
}

TEST_CASE("validator preconditions") {
    CHECK_THROWS_AS(validate_regret_function(difference_regret(), {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(validate_regret_function(difference_regret(), OutcomeSpace{q(1), q(0)}, 5),
                    std::invalid_argument);
}

TEST_CASE("regret lottery examples") {
    const auto psi = difference_regret();
    const auto x = on_halves(q(1), q(0));
    const auto y = on_halves(q(0), q(1));

    CHECK(regret_lottery(psi, x, y) ==
          RegretLottery({{q(-1), q(1, 2)}, {q(1), q(1, 2)}}));
    CHECK(regret_lottery(psi, x, x) == RegretLottery({{q(0), q(1)}}));

    const SimpleRandomVariable ones({{q(1), Event::full()}}, OutcomeSpace{q(0), q(2)});
    const SimpleRandomVariable two_halves({{q(0), Event::interval(q(0), q(1, 2))},
                                           {q(2), Event::interval(q(1, 2), q(1))}},
                                          OutcomeSpace{q(0), q(2)});
    CHECK(regret_lottery(psi, ones, two_halves) ==
          RegretLottery({{q(-1), q(1, 2)}, {q(1), q(1, 2)}}));
}

TEST_CASE("lottery canonicalization") {
    // equal regrets merge, zero probabilities drop, entries sort by regret
    const RegretLottery l({{q(1), q(1, 4)}, {q(-1), q(1, 2)}, {q(1), q(1, 4)}, {q(0), q(0)}});
    CHECK(l == RegretLottery({{q(-1), q(1, 2)}, {q(1), q(1, 2)}}));
    CHECK(l.text() == "{(-1/1, 1/2), (1/1, 1/2)}");

    CHECK_THROWS_AS(RegretLottery({{q(1), q(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(RegretLottery({{q(1), q(-1, 2)}, {q(0), q(3, 2)}}), std::invalid_argument);
}

TEST_CASE("lottery equals the brute-force assembly on random pairs") {
    SeededRng rng(211);
    const auto psi = difference_regret();
    for (int i = 0; i < 150; ++i) {
        const auto x = rax::testing::random_variable(rng, kGrid);
        const auto y = rax::testing::random_variable(rng, kGrid);
        CHECK(regret_lottery(psi, x, y) == oracle_lottery(psi, x, y));
    }
}

TEST_CASE("difference lottery of the reversed pair is the mirror image") {
    SeededRng rng(223);
    const auto psi = difference_regret();
    for (int i = 0; i < 150; ++i) {
        const auto x = rax::testing::random_variable(rng, kGrid);
        const auto y = rax::testing::random_variable(rng, kGrid);
        const auto forward = regret_lottery(psi, x, y);
        const auto backward = regret_lottery(psi, y, x);

        std::vector<std::pair<Rational, Rational>> mirrored;
        for (const auto& [regret, prob] : forward.entries())
            mirrored.emplace_back(-regret, prob);
        CHECK(RegretLottery(mirrored) == backward);
    }
}

TEST_CASE("probabilities of an emitted lottery sum to one") {
    SeededRng rng(227);
    const auto psi = difference_regret();
    for (int i = 0; i < 100; ++i) {
        const auto x = rax::testing::random_variable(rng, kGrid);
        const auto y = rax::testing::random_variable(rng, kGrid);
        Rational total = 0;
        for (const auto& [regret, prob] : regret_lottery(psi, x, y).entries()) total += prob;
        CHECK(total == 1);
    }
}

TEST_CASE("splitting cells leaves the lottery unchanged") {
    SeededRng rng(229);
    const auto psi = difference_regret();
    for (int i = 0; i < 100; ++i) {
        const auto x = rax::testing::random_variable(rng, kGrid);
        const auto y = rax::testing::random_variable(rng, kGrid);
        CHECK(regret_lottery(psi, rax::testing::split_variant(x, rng), y) ==
              regret_lottery(psi, x, y));
        CHECK(regret_lottery(psi, x, rax::testing::split_variant(y, rng)) ==
              regret_lottery(psi, x, y));
    }
}

TEST_CASE("zero lottery exactly characterizes a.e. equality") {
    SeededRng rng(233);
    const auto psi = difference_regret();
    const RegretLottery zero({{q(0), q(1)}});
    for (int i = 0; i < 200; ++i) {
        const auto x = rax::testing::random_variable(rng, kGrid);
        const auto y = rng.below(4) == 0 ? rax::testing::split_variant(x, rng)
                                         : rax::testing::random_variable(rng, kGrid);
        CHECK((regret_lottery(psi, x, y) == zero) == equal_ae(x, y));
    }
}
