#include "rax/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace rax {

Partition::Partition(std::vector<Event> cells) {
    std::erase_if(cells, [](const Event& e) { return e.empty(); });
    if (cells.empty()) throw std::invalid_argument("partition: no cells of positive measure");

    std::stable_sort(cells.begin(), cells.end(),
                     [](const Event& a, const Event& b) { return a.leftmost() < b.leftmost(); });

    // Pool all pieces; the cells tile [0,1) exactly iff the sorted pieces
    // chain from 0 to 1 with no gap and no overlap.
    std::vector<Interval> pieces;
    for (const auto& c : cells)
        pieces.insert(pieces.end(), c.pieces().begin(), c.pieces().end());
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Rational edge = 0;
    for (const auto& p : pieces) {
        if (p.lo != edge)
            throw std::invalid_argument(p.lo < edge ? "partition: cells overlap"
                                                    : "partition: cells leave a gap");
        edge = p.hi;
    }
    if (edge != 1) throw std::invalid_argument("partition: cells leave a gap");

    cells_ = std::move(cells);
}

Partition Partition::trivial() { return Partition({Event::full()}); }

Refinement common_refinement(const Partition& a, const Partition& b) {
    std::vector<std::tuple<Event, std::size_t, std::size_t>> pieces;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            Event cell = intersect(a.cells()[i], b.cells()[j]);
            if (!cell.empty()) pieces.emplace_back(std::move(cell), i, j);
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) {
        return std::get<0>(x).leftmost() < std::get<0>(y).leftmost();
    });

    Refinement out;
    out.cells.reserve(pieces.size());
    out.from_a.reserve(pieces.size());
    out.from_b.reserve(pieces.size());
    for (auto& [cell, i, j] : pieces) {
        out.cells.push_back(std::move(cell));
        out.from_a.push_back(i);
        out.from_b.push_back(j);
    }
    return out;
}

}  // namespace rax
