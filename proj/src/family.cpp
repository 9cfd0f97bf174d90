#include "rax/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "rax/rng.hpp"

namespace rax {

std::vector<Rational> default_outcome_grid(const OutcomeSpace& space) {
    check_outcome_space(space);
    std::vector<Rational> grid;
    grid.reserve(5);
    const Rational span = space.upper - space.lower;
    for (int i = 0; i <= 4; ++i) grid.push_back(space.lower + span * i / 4);
    return grid;
}

Family generate_family(std::uint64_t seed, GeneratorConfig config) {
    check_outcome_space(config.space);
    if (config.size < 2)
        throw std::invalid_argument("family generator: size must be at least 2");
    if (config.max_cells < 1)
        throw std::invalid_argument("family generator: max_cells must be at least 1");
    if (config.outcome_grid.empty())
        throw std::invalid_argument("family generator: outcome grid is empty");
    for (const auto& value : config.outcome_grid) {
        if (value < config.space.lower || value > config.space.upper)
            throw std::invalid_argument("family generator: grid value " + format_rational(value) +
                                        " outside the outcome space");
    }
    std::sort(config.outcome_grid.begin(), config.outcome_grid.end());
    config.outcome_grid.erase(
        std::unique(config.outcome_grid.begin(), config.outcome_grid.end()),
        config.outcome_grid.end());

    const auto& grid = config.outcome_grid;
    SeededRng rng(seed);
    Family family{{}, seed, config};
    family.members.reserve(grid.size() + 2 * static_cast<std::size_t>(config.size));

    for (const auto& value : grid)
        family.members.push_back(SimpleRandomVariable::constant(value, config.space));

    for (int n = 0; n < config.size; ++n) {
        const std::size_t k =
            config.max_cells >= 2 ? 2 + rng.below(static_cast<std::uint64_t>(config.max_cells) - 1)
                                  : 1;
        std::vector<Rational> outcomes;
        outcomes.reserve(k);
        for (std::size_t i = 0; i < k; ++i) outcomes.push_back(grid[rng.below(grid.size())]);
        if (k >= 2 && grid.size() >= 2 &&
            std::all_of(outcomes.begin(), outcomes.end(),
                        [&outcomes](const Rational& o) { return o == outcomes.front(); })) {
            // force a second value so the partner can actually differ
            outcomes.back() = grid.front() == outcomes.front() ? grid[1] : grid.front();
        }

        std::vector<RVCell> cells;
        cells.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            cells.push_back(RVCell{outcomes[i],
                                   Event::interval(Rational(BigInt(i), BigInt(k)),
                                                   Rational(BigInt(i + 1), BigInt(k)))});
        }
        family.members.emplace_back(cells, config.space);

        // partner: same equal-measure cells, outcomes permuted
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        if (k >= 2 && std::is_sorted(perm.begin(), perm.end()))
            std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        for (std::size_t i = 0; i < k; ++i) cells[i].outcome = outcomes[perm[i]];
        family.members.emplace_back(std::move(cells), config.space);
    }
    return family;
}

namespace {

SimpleRandomVariable steps(std::vector<std::pair<long long, long long>> outcomes_over_equal_cells) {
    const auto k = static_cast<long long>(outcomes_over_equal_cells.size());
    std::vector<RVCell> cells;
    cells.reserve(outcomes_over_equal_cells.size());
    for (long long i = 0; i < k; ++i) {
        const auto [num, den] = outcomes_over_equal_cells[i];
        cells.push_back(RVCell{Rational(num, den), Event::interval(Rational(i, k),
                                                                   Rational(i + 1, k))});
    }
    return SimpleRandomVariable(std::move(cells));
}

}  // namespace

Family demo_family() {
    const Rational quarter(1, 4);
    std::vector<SimpleRandomVariable> members;
    members.reserve(12);

    members.push_back(SimpleRandomVariable::constant(Rational(0)));
    members.push_back(SimpleRandomVariable::constant(Rational(1, 2)));
    members.push_back(SimpleRandomVariable::constant(Rational(1)));

    // the swap pair: identically distributed, nowhere equal
    members.push_back(steps({{1, 1}, {0, 1}}));
    members.push_back(steps({{0, 1}, {1, 1}}));
    // the first swap member again, written over split cells; canonical
    // form makes it an exact duplicate
    members.push_back(SimpleRandomVariable({{Rational(1), Event::interval(Rational(0), quarter)},
                                            {Rational(1), Event::interval(quarter, Rational(1, 2))},
                                            {Rational(0), Event::interval(Rational(1, 2), Rational(1))}}));

    // three rearrangements of (0, 1/2, 1) across thirds
    members.push_back(steps({{0, 1}, {1, 2}, {1, 1}}));
    members.push_back(steps({{1, 1}, {1, 2}, {0, 1}}));
    members.push_back(steps({{1, 2}, {1, 1}, {0, 1}}));

    // a second identically-distributed pair, on unequal cells
    members.push_back(SimpleRandomVariable({{Rational(1), Event::interval(Rational(0), Rational(3, 4))},
                                            {Rational(0), Event::interval(Rational(3, 4), Rational(1))}}));
    members.push_back(SimpleRandomVariable({{Rational(0), Event::interval(Rational(0), quarter)},
                                            {Rational(1), Event::interval(quarter, Rational(1))}}));

    members.push_back(SimpleRandomVariable({{Rational(3, 4), Event::interval(Rational(0), quarter)},
                                            {quarter, Event::interval(quarter, Rational(1))}}));

    Family family{std::move(members), 0, {}};
    family.config.outcome_grid = default_outcome_grid(family.config.space);
    return family;
}

nlohmann::json family_to_json(const Family& family) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& member : family.members) members.push_back(member.to_json());
    return members;
}

Family family_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("family: expected a nonempty array of random variables");
    Family family;
    family.members.reserve(j.size());
    for (const auto& item : j) family.members.push_back(SimpleRandomVariable::from_json(item));
    for (const auto& member : family.members) {
        if (!(member.space() == family.members.front().space()))
            throw std::invalid_argument("family: members use different outcome spaces");
    }
    return family;
}

}  // namespace rax
