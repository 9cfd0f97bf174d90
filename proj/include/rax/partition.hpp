#pragma once

#include <cstddef>
#include <vector>

#include "rax/event.hpp"

namespace rax {

// A finite partition of [0, 1): pairwise-disjoint events of strictly
// positive measure whose union tiles the whole space exactly. Empty cells
// are dropped at construction; cells are ordered by leftmost endpoint.
class Partition {
public:
    /// Throws std::invalid_argument if the cells overlap or leave a gap.
    explicit Partition(std::vector<Event> cells);

    /// The one-cell partition {[0, 1)}.
    static Partition trivial();

    const std::vector<Event>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<Event> cells_;
};

// Common refinement of two partitions: every nonempty pairwise
// intersection of an a-cell with a b-cell, ordered by leftmost endpoint.
// from_a[i] / from_b[i] give the index of the unique a-cell (b-cell)
// containing cells[i].
struct Refinement {
    std::vector<Event> cells;
    std::vector<std::size_t> from_a;
    std::vector<std::size_t> from_b;

    Partition partition() const { return Partition(cells); }
};

Refinement common_refinement(const Partition& a, const Partition& b);

}  // namespace rax
