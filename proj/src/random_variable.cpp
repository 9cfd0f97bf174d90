#include "rax/random_variable.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace rax {

void check_outcome_space(const OutcomeSpace& space) {
    if (!(space.lower < space.upper))
        throw std::invalid_argument("outcome space: lower bound must be below upper bound");
}

namespace {

// One cell per distinct outcome, events merged, empty events dropped,
// cells ordered by leftmost endpoint. Tiling is validated by the
// Partition constructed from the result.
std::vector<RVCell> canonical_cells(std::vector<RVCell> cells, const OutcomeSpace& space) {
    check_outcome_space(space);
    std::map<Rational, Event> merged;
    for (auto& cell : cells) {
        if (cell.outcome < space.lower || cell.outcome > space.upper)
            throw std::invalid_argument("random variable: outcome " +
                                        format_rational(cell.outcome) +
                                        " outside the outcome space");
        if (cell.event.empty()) continue;
        auto [it, inserted] = merged.try_emplace(cell.outcome, cell.event);
        if (!inserted) it->second = unite(it->second, cell.event);
    }
    std::vector<RVCell> out;
    out.reserve(merged.size());
    for (auto& [outcome, event] : merged) out.push_back(RVCell{outcome, event});
    std::sort(out.begin(), out.end(), [](const RVCell& a, const RVCell& b) {
        return a.event.leftmost() < b.event.leftmost();
    });
    return out;
}

std::vector<Event> events_of(const std::vector<RVCell>& cells) {
    std::vector<Event> events;
    events.reserve(cells.size());
    for (const auto& cell : cells) events.push_back(cell.event);
    return events;
}

}  // namespace

SimpleRandomVariable::SimpleRandomVariable(std::vector<RVCell> cells, OutcomeSpace space)
    : cells_(canonical_cells(std::move(cells), space)),
      partition_(events_of(cells_)),
      space_(std::move(space)) {}

SimpleRandomVariable SimpleRandomVariable::constant(const Rational& value, OutcomeSpace space) {
    return SimpleRandomVariable({RVCell{value, Event::full()}}, std::move(space));
}

const Rational& SimpleRandomVariable::value_at(const Rational& point) const {
    for (const auto& cell : cells_)
        if (cell.event.contains(point)) return cell.outcome;
    throw std::invalid_argument("random variable: state point " + format_rational(point) +
                                " outside [0, 1)");
}

std::string SimpleRandomVariable::text() const {
    std::string out = "(";
    for (const auto& cell : cells_) {
        if (out.size() > 1) out += "; ";
        out += format_rational(cell.outcome) + " on " + cell.event.text();
    }
    return out + ")";
}

nlohmann::json SimpleRandomVariable::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : cells_) {
        cells.push_back({{"event", cell.event.text()}, {"outcome", format_rational(cell.outcome)}});
    }
    return {{"space", {{"lo", format_rational(space_.lower)}, {"hi", format_rational(space_.upper)}}},
            {"cells", cells}};
}

SimpleRandomVariable SimpleRandomVariable::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("cells"))
        throw std::invalid_argument("random variable: expected {space, cells}");
    OutcomeSpace space{parse_rational(j.at("space").at("lo").get<std::string>()),
                       parse_rational(j.at("space").at("hi").get<std::string>())};
    std::vector<RVCell> cells;
    for (const auto& c : j.at("cells")) {
        cells.push_back(RVCell{parse_rational(c.at("outcome").get<std::string>()),
                               Event::parse(c.at("event").get<std::string>())});
    }
    return SimpleRandomVariable(std::move(cells), std::move(space));
}

Distribution distribution(const SimpleRandomVariable& x) {
    // Cells are canonical: one per distinct outcome. Atoms ordered by
    // outcome value, not by cell position.
    std::map<Rational, Rational> atoms;
    for (const auto& cell : x.cells()) atoms.emplace(cell.outcome, cell.event.measure());
    Distribution d;
    d.atoms.assign(atoms.begin(), atoms.end());
    return d;
}

namespace {

void check_shared_space(const SimpleRandomVariable& x, const SimpleRandomVariable& y) {
    if (!(x.space() == y.space()))
        throw std::invalid_argument("random variables live in different outcome spaces");
}

}  // namespace

bool same_distribution(const SimpleRandomVariable& x, const SimpleRandomVariable& y) {
    check_shared_space(x, y);
    return distribution(x) == distribution(y);
}

Alignment align(const SimpleRandomVariable& x, const SimpleRandomVariable& y) {
    check_shared_space(x, y);
    Refinement r = common_refinement(x.partition(), y.partition());
    Alignment out{r.partition(), {}, {}};
    out.x_outcomes.reserve(r.cells.size());
    out.y_outcomes.reserve(r.cells.size());
    for (std::size_t k = 0; k < r.cells.size(); ++k) {
        out.x_outcomes.push_back(x.cells()[r.from_a[k]].outcome);
        out.y_outcomes.push_back(y.cells()[r.from_b[k]].outcome);
    }
    return out;
}

bool equal_ae(const SimpleRandomVariable& x, const SimpleRandomVariable& y) {
    const Alignment a = align(x, y);
    return a.x_outcomes == a.y_outcomes;
}

Dominance statewise_dominates(const SimpleRandomVariable& x, const SimpleRandomVariable& y) {
    const Alignment a = align(x, y);
    bool somewhere_above = false;
    for (std::size_t k = 0; k < a.x_outcomes.size(); ++k) {
        if (a.x_outcomes[k] < a.y_outcomes[k]) return Dominance::none;
        if (a.x_outcomes[k] > a.y_outcomes[k]) somewhere_above = true;
    }
    return somewhere_above ? Dominance::strict : Dominance::weak;
}

}  // namespace rax
