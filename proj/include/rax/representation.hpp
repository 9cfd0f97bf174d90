#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rax/regret.hpp"

namespace rax {

// A preference representation: X is weakly preferred to Y exactly when
// value(Psi(X, Y)) >= 0, where Psi is built from the paired regret
// function. `value` must be total on canonical lotteries; continuity of
// each built-in is an analytic fact of its formula (constants, linear
// functionals and weighted sums of absolute values), not something tested
// numerically here.
struct Representation {
    std::string name;
    RegretFunction psi;
    std::function<Rational(const RegretLottery&)> value;
};

/// V = -1 on every lottery. Relates no pair at all.
Representation constant_negative();

/// V = -sum_i |r_i| p_i. Nonpositive; zero exactly on the point mass at 0,
/// so it relates a pair only when the variables are equal a.e.
Representation neg_abs_sum();

/// V = sum_i r_i p_i. With the difference regret function this orders
/// variables by expectation; the positive control for the audits.
Representation expected_regret();

const std::vector<std::string>& representation_names();
std::optional<Representation> representation_by_name(std::string_view name);

// Both directions of one comparison, with the exact functional values.
// Incomparability (neither direction holds) is an ordinary verdict.
struct PreferenceVerdict {
    bool forward = false;   // X weakly preferred to Y
    bool backward = false;  // Y weakly preferred to X
    Rational value_forward;
    Rational value_backward;

    bool strict() const { return forward && !backward; }
    bool indifferent() const { return forward && backward; }
    bool incomparable() const { return !forward && !backward; }

    /// The same comparison read from the other side.
    PreferenceVerdict reversed() const {
        return {backward, forward, value_backward, value_forward};
    }

    bool operator==(const PreferenceVerdict&) const = default;
};

PreferenceVerdict prefer(const Representation& rep, const SimpleRandomVariable& x,
                         const SimpleRandomVariable& y);

}  // namespace rax
