#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rax/partition.hpp"
#include "rax/rational.hpp"

namespace rax {

// Bounded outcome interval. Outcomes of every variable must lie inside it.
struct OutcomeSpace {
    Rational lower = 0;
    Rational upper = 1;
    bool operator==(const OutcomeSpace&) const = default;
};

/// Throws std::invalid_argument unless lower < upper.
void check_outcome_space(const OutcomeSpace& space);

struct RVCell {
    Rational outcome;
    Event event;
    bool operator==(const RVCell&) const = default;
};

// A finite-valued random variable on [0, 1): a finite list of
// (outcome, event) cells whose events partition the state space.
//
// Canonical form: one cell per distinct outcome (events of equal-outcome
// cells are merged), cells ordered by leftmost endpoint. Two variables
// are equal as functions (up to null sets) exactly when their canonical
// forms are identical; the half-open convention leaves no boundary
// ambiguity.
class SimpleRandomVariable {
public:
    /// Canonicalizes and validates. Throws std::invalid_argument if the
    /// events do not partition [0, 1) or an outcome leaves the space.
    SimpleRandomVariable(std::vector<RVCell> cells, OutcomeSpace space = {});

    static SimpleRandomVariable constant(const Rational& value, OutcomeSpace space = {});

    const OutcomeSpace& space() const { return space_; }
    const std::vector<RVCell>& cells() const { return cells_; }

    /// The partition formed by the cell events, in cell order.
    const Partition& partition() const { return partition_; }

    /// Outcome at a state point in [0, 1).
    const Rational& value_at(const Rational& point) const;

    /// Canonical text, e.g. "(1/1 on [0/1, 1/2); 0/1 on [1/2, 1/1))".
    std::string text() const;

    nlohmann::json to_json() const;
    static SimpleRandomVariable from_json(const nlohmann::json& j);

    bool operator==(const SimpleRandomVariable&) const = default;

private:
    std::vector<RVCell> cells_;
    Partition partition_;  // the cell events, in cell order
    OutcomeSpace space_;
};

// Finite-support distribution: (outcome, probability) atoms with strictly
// increasing outcomes, positive probabilities, total mass one. For
// finite-support laws, atom equality is cumulative-distribution equality.
struct Distribution {
    std::vector<std::pair<Rational, Rational>> atoms;
    bool operator==(const Distribution&) const = default;
};

Distribution distribution(const SimpleRandomVariable& x);

/// Exact equality of the two induced distributions. Requires a shared
/// outcome space.
bool same_distribution(const SimpleRandomVariable& x, const SimpleRandomVariable& y);

// Both variables restated over the common refinement of their partitions:
// x_outcomes[i] / y_outcomes[i] are the constant values on cells[i].
struct Alignment {
    Partition cells;
    std::vector<Rational> x_outcomes;
    std::vector<Rational> y_outcomes;
};

Alignment align(const SimpleRandomVariable& x, const SimpleRandomVariable& y);

/// Equality up to null sets: equal outcomes on every aligned cell.
bool equal_ae(const SimpleRandomVariable& x, const SimpleRandomVariable& y);

enum class Dominance {
    none,
    weak,   // x >= y on every aligned cell
    strict  // weak, and x > y on some cell (cells have positive measure)
};

Dominance statewise_dominates(const SimpleRandomVariable& x, const SimpleRandomVariable& y);

}  // namespace rax
