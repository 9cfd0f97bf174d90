#include "rax/representation.hpp"

namespace rax {

Representation constant_negative() {
    return {"constant-negative", difference_regret(),
            [](const RegretLottery&) { return Rational(-1); }};
}

Representation neg_abs_sum() {
    return {"neg-abs-sum", difference_regret(), [](const RegretLottery& lottery) {
                Rational total = 0;
                for (const auto& [regret, prob] : lottery.entries()) total += abs(regret) * prob;
                return Rational(-total);
            }};
}

Representation expected_regret() {
    return {"expected-regret", difference_regret(), [](const RegretLottery& lottery) {
                Rational total = 0;
                for (const auto& [regret, prob] : lottery.entries()) total += regret * prob;
                return total;
            }};
}

const std::vector<std::string>& representation_names() {
    static const std::vector<std::string> names{"constant-negative", "neg-abs-sum",
                                                "expected-regret"};
    return names;
}

std::optional<Representation> representation_by_name(std::string_view name) {
    if (name == "constant-negative") return constant_negative();
    if (name == "neg-abs-sum") return neg_abs_sum();
    if (name == "expected-regret") return expected_regret();
    return std::nullopt;
}

PreferenceVerdict prefer(const Representation& rep, const SimpleRandomVariable& x,
                         const SimpleRandomVariable& y) {
    // One alignment serves both directions.
    const Alignment a = align(x, y);
    const Rational forward =
        rep.value(lottery_from_aligned(rep.psi, a.cells, a.x_outcomes, a.y_outcomes));
    const Rational backward =
        rep.value(lottery_from_aligned(rep.psi, a.cells, a.y_outcomes, a.x_outcomes));
    return {forward >= 0, backward >= 0, forward, backward};
}

}  // namespace rax
