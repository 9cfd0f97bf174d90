#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rax/random_variable.hpp"

namespace rax {

struct GeneratorConfig {
    int size = 8;       // random members to draw (each brings a partner)
    int max_cells = 4;  // cells per random member
    std::vector<Rational> outcome_grid;  // candidate outcomes, within the space
    OutcomeSpace space;
};

/// The default grid {0, 1/4, 1/2, 3/4, 1} scaled onto `space`.
std::vector<Rational> default_outcome_grid(const OutcomeSpace& space = {});

// A finite universe of random variables sharing one outcome space.
// Generated families are a pure function of (seed, config); `seed` and
// `config` are provenance only for families loaded from files.
struct Family {
    std::vector<SimpleRandomVariable> members;
    std::uint64_t seed = 0;
    GeneratorConfig config;
};

/// Deterministic family: one constant per grid value, then `size` random
/// members, each immediately followed by a same-distribution partner
/// obtained by permuting its outcomes across its equal-measure cells.
/// Random members use uniform k-cell partitions (2 <= k <= max_cells when
/// max_cells permits) and never take a single outcome everywhere, so the
/// partner genuinely reshuffles mass whenever the grid has two values.
///
/// Throws std::invalid_argument on a bad config (size < 2, max_cells < 1,
/// empty grid, or grid values outside the space).
Family generate_family(std::uint64_t seed, GeneratorConfig config);

/// The built-in demonstration family on [0, 1]: constants 0, 1/2 and 1,
/// the swap pair on halves (plus a duplicate of one member of it built
/// from split cells), a trio of rearrangements on thirds, and a handful
/// of further members including a second identically-distributed pair.
Family demo_family();

/// Family file payload: a JSON array of random-variable objects.
nlohmann::json family_to_json(const Family& family);

/// Parses a family file payload. Throws std::invalid_argument unless the
/// array is nonempty and every member shares one outcome space.
Family family_from_json(const nlohmann::json& j);

}  // namespace rax
