#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rax/rational.hpp"

namespace rax {

// Half-open interval [lo, hi) inside the unit state space.
struct Interval {
    Rational lo;
    Rational hi;
    bool operator==(const Interval&) const = default;
};

// A finite union of disjoint half-open rational intervals in [0, 1].
// Canonical form: pieces sorted by lo, nonempty, with a strictly positive
// gap between consecutive pieces (hi of one < lo of the next). Measure
// arithmetic on these sets is exact.
class Event {
public:
    Event() = default;  // the empty set

    /// Union of the given pieces. Overlapping or touching pieces merge,
    /// empty pieces are dropped. Throws std::invalid_argument if any
    /// endpoint leaves [0, 1] or has lo > hi.
    static Event from_pieces(std::vector<Interval> pieces);

    static Event interval(const Rational& lo, const Rational& hi);

    /// The full space [0, 1).
    static Event full();

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    /// Lebesgue measure: the exact sum of piece lengths.
    Rational measure() const;

    bool contains(const Rational& point) const;

    /// Leftmost endpoint. Requires a non-empty event.
    const Rational& leftmost() const;

    /// Canonical text form: "[a/b, c/d)" pieces joined by ", ".
    /// The empty event renders as "(empty)".
    std::string text() const;

    /// Inverse of text(). Whitespace-insensitive.
    static Event parse(std::string_view text);

    bool operator==(const Event&) const = default;

private:
    std::vector<Interval> pieces_;
};

Event intersect(const Event& a, const Event& b);
Event unite(const Event& a, const Event& b);

}  // namespace rax
