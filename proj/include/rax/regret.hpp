#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rax/random_variable.hpp"
#include "rax/rational.hpp"

namespace rax {

// Ex-post comparison of receiving x when y was the alternative. The
// evaluation map must be pure, total on the outcome space squared, and
// rational-valued on rational inputs.
struct RegretFunction {
    std::string name;
    std::function<Rational(const Rational&, const Rational&)> evaluate;
};

/// psi(x, y) = x - y.
RegretFunction difference_regret();

/// psi(x, y) = y - x. Violates monotonicity on both arguments; kept
/// registered so the validator's failure path stays exercised end to end.
RegretFunction negated_difference_regret();

/// psi(x, y) = x - y + 1. Violates the zero-diagonal requirement; same
/// demonstration role as negated_difference_regret.
RegretFunction offset_difference_regret();

const std::vector<std::string>& regret_function_names();
std::optional<RegretFunction> regret_function_by_name(std::string_view name);

// Finite lottery over regret values: (regret, probability) entries sorted
// by regret with equal regrets merged, probabilities positive and summing
// to exactly one.
class RegretLottery {
public:
    /// Canonicalizes. Zero-probability entries are dropped; negative
    /// probabilities or total mass != 1 throw std::invalid_argument.
    explicit RegretLottery(std::vector<std::pair<Rational, Rational>> entries);

    const std::vector<std::pair<Rational, Rational>>& entries() const { return entries_; }

    /// "{(r, p), ...}" with canonical rational text.
    std::string text() const;

    bool operator==(const RegretLottery&) const = default;

private:
    std::vector<std::pair<Rational, Rational>> entries_;
};

/// The lottery of psi(x, y) over the common refinement of x and y:
/// entry (psi(x_i, y_i), measure of cell i) per aligned cell, canonicalized.
RegretLottery regret_lottery(const RegretFunction& psi, const SimpleRandomVariable& x,
                             const SimpleRandomVariable& y);

/// regret_lottery for variables already on a common partition.
RegretLottery lottery_from_aligned(const RegretFunction& psi, const Partition& cells,
                                   const std::vector<Rational>& x_outcomes,
                                   const std::vector<Rational>& y_outcomes);

// Grid certificate for the regret-function axioms. A pass certifies the
// named grid only; the built-ins carry analytic arguments beyond it.
enum class PsiCheck {
    diagonal_zero,         // psi(x, x) = 0
    increasing_in_first,   // strictly, along every y-slice
    decreasing_in_second,  // strictly, along every x-slice
};

std::string psi_check_name(PsiCheck check);

struct PsiViolation {
    PsiCheck check;
    // The witness: for the diagonal, one point (x1 = y1) and its value in
    // value1. For monotonicity, the two probed points and both values.
    Rational x1, y1, x2, y2;
    Rational value1, value2;
    std::string describe() const;
};

struct PsiValidationReport {
    std::string function_name;
    OutcomeSpace space;
    int grid_points = 0;
    bool passed = false;
    std::vector<PsiViolation> violations;  // first witness per failing check
};

/// Checks the axioms on a uniform rational grid of `grid_points` points
/// across the outcome space. Requires grid_points >= 3. A failing function
/// yields a failing report, not an error.
PsiValidationReport validate_regret_function(const RegretFunction& psi, const OutcomeSpace& space,
                                             int grid_points);

}  // namespace rax
