#include "rax/regret.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rax {

RegretFunction difference_regret() {
    return {"difference", [](const Rational& x, const Rational& y) { return Rational(x - y); }};
}

RegretFunction negated_difference_regret() {
    return {"neg-difference", [](const Rational& x, const Rational& y) { return Rational(y - x); }};
}

RegretFunction offset_difference_regret() {
    return {"offset-difference",
            [](const Rational& x, const Rational& y) { return Rational(x - y + 1); }};
}

const std::vector<std::string>& regret_function_names() {
    static const std::vector<std::string> names{"difference", "neg-difference",
                                                "offset-difference"};
    return names;
}

std::optional<RegretFunction> regret_function_by_name(std::string_view name) {
    if (name == "difference") return difference_regret();
    if (name == "neg-difference") return negated_difference_regret();
    if (name == "offset-difference") return offset_difference_regret();
    return std::nullopt;
}

RegretLottery::RegretLottery(std::vector<std::pair<Rational, Rational>> entries) {
    Rational total = 0;
    std::vector<std::pair<Rational, Rational>> kept;
    kept.reserve(entries.size());
    for (auto& [regret, prob] : entries) {
        if (prob < 0)
            throw std::invalid_argument("regret lottery: negative probability " +
                                        format_rational(prob));
        if (prob == 0) continue;
        total += prob;
        kept.emplace_back(std::move(regret), std::move(prob));
    }
    if (total != 1)
        throw std::invalid_argument("regret lottery: probabilities sum to " +
                                    format_rational(total) + ", not 1");
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    entries_.reserve(kept.size());
    for (auto& entry : kept) {
        if (!entries_.empty() && entries_.back().first == entry.first)
            entries_.back().second += entry.second;
        else
            entries_.push_back(std::move(entry));
    }
}

std::string RegretLottery::text() const {
    std::string out = "{";
    for (const auto& [regret, prob] : entries_) {
        if (out.size() > 1) out += ", ";
        out += "(" + format_rational(regret) + ", " + format_rational(prob) + ")";
    }
    return out + "}";
}

RegretLottery lottery_from_aligned(const RegretFunction& psi, const Partition& cells,
                                   const std::vector<Rational>& x_outcomes,
                                   const std::vector<Rational>& y_outcomes) {
    std::vector<std::pair<Rational, Rational>> entries;
    entries.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        entries.emplace_back(psi.evaluate(x_outcomes[i], y_outcomes[i]),
                             cells.cells()[i].measure());
    return RegretLottery(std::move(entries));
}

RegretLottery regret_lottery(const RegretFunction& psi, const SimpleRandomVariable& x,
                             const SimpleRandomVariable& y) {
    const Alignment a = align(x, y);
    return lottery_from_aligned(psi, a.cells, a.x_outcomes, a.y_outcomes);
}

std::string psi_check_name(PsiCheck check) {
    switch (check) {
        case PsiCheck::diagonal_zero: return "diagonal-zero";
        case PsiCheck::increasing_in_first: return "increasing-in-first";
        case PsiCheck::decreasing_in_second: return "decreasing-in-second";
    }
    return "?";
}

std::string PsiViolation::describe() const {
    switch (check) {
        case PsiCheck::diagonal_zero:
            return "psi(" + format_rational(x1) + ", " + format_rational(y1) +
                   ") = " + format_rational(value1) + ", expected 0/1";
        case PsiCheck::increasing_in_first:
            return "psi(" + format_rational(x1) + ", " + format_rational(y1) +
                   ") = " + format_rational(value1) + " but psi(" + format_rational(x2) + ", " +
                   format_rational(y2) + ") = " + format_rational(value2) +
                   "; not strictly increasing in the first argument";
        case PsiCheck::decreasing_in_second:
            return "psi(" + format_rational(x1) + ", " + format_rational(y1) +
                   ") = " + format_rational(value1) + " but psi(" + format_rational(x2) + ", " +
                   format_rational(y2) + ") = " + format_rational(value2) +
                   "; not strictly decreasing in the second argument";
    }
    return "?";
}

PsiValidationReport validate_regret_function(const RegretFunction& psi, const OutcomeSpace& space,
                                             int grid_points) {
    check_outcome_space(space);
    if (grid_points < 3)
        throw std::invalid_argument("validate_regret_function: need at least 3 grid points");

    std::vector<Rational> grid;
    grid.reserve(grid_points);
    const Rational step = (space.upper - space.lower) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) grid.push_back(space.lower + step * i);

    PsiValidationReport report{psi.name, space, grid_points, true, {}};
    auto record = [&report](PsiViolation v) {
        report.passed = false;
        report.violations.push_back(std::move(v));
    };

    for (const auto& g : grid) {
        const Rational v = psi.evaluate(g, g);
        if (v != 0) {
            record({PsiCheck::diagonal_zero, g, g, g, g, v, 0});
            break;
        }
    }
    [&] {
        for (const auto& y : grid) {
            for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
                const Rational lo = psi.evaluate(grid[i], y);
                const Rational hi = psi.evaluate(grid[i + 1], y);
                if (!(lo < hi)) {
                    record({PsiCheck::increasing_in_first, grid[i], y, grid[i + 1], y, lo, hi});
                    return;
                }
            }
        }
    }();
    [&] {
        for (const auto& x : grid) {
            for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
                const Rational hi = psi.evaluate(x, grid[j]);
                const Rational lo = psi.evaluate(x, grid[j + 1]);
                if (!(hi > lo)) {
                    record({PsiCheck::decreasing_in_second, x, grid[j], x, grid[j + 1], hi, lo});
                    return;
                }
            }
        }
    }();
    return report;
}

}  // namespace rax
