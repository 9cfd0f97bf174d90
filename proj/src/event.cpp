#include "rax/event.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rax {

Event Event::from_pieces(std::vector<Interval> pieces) {
    for (const auto& p : pieces) {
        if (p.lo < 0 || p.hi > 1 || p.lo > p.hi)
            throw std::invalid_argument("event: interval outside [0,1] or reversed: [" +
                                        format_rational(p.lo) + ", " + format_rational(p.hi) + ")");
    }
    std::erase_if(pieces, [](const Interval& p) { return p.lo == p.hi; });
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    Event e;
    for (auto& p : pieces) {
        if (!e.pieces_.empty() && p.lo <= e.pieces_.back().hi) {
            if (p.hi > e.pieces_.back().hi) e.pieces_.back().hi = std::move(p.hi);
        } else {
            e.pieces_.push_back(std::move(p));
        }
    }
    return e;
}

Event Event::interval(const Rational& lo, const Rational& hi) {
    return from_pieces({Interval{lo, hi}});
}

Event Event::full() { return interval(0, 1); }

Rational Event::measure() const {
    Rational total = 0;
    for (const auto& p : pieces_) total += p.hi - p.lo;
    return total;
}

bool Event::contains(const Rational& point) const {
    for (const auto& p : pieces_) {
        if (point < p.lo) return false;
        if (point < p.hi) return true;
    }
    return false;
}

const Rational& Event::leftmost() const {
    if (pieces_.empty()) throw std::logic_error("event: leftmost of empty event");
    return pieces_.front().lo;
}

std::string Event::text() const {
    if (pieces_.empty()) return "(empty)";
    std::string out;
    for (const auto& p : pieces_) {
        if (!out.empty()) out += ", ";
        out += "[" + format_rational(p.lo) + ", " + format_rational(p.hi) + ")";
    }
    return out;
}

Event Event::parse(std::string_view text) {
    std::string stripped;
    stripped.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') stripped += c;
    if (stripped.empty() || stripped == "(empty)") return Event{};

    std::vector<Interval> pieces;
    std::size_t pos = 0;
    while (pos < stripped.size()) {
        if (stripped[pos] == ',') {  // separator between pieces
            ++pos;
            continue;
        }
        if (stripped[pos] != '[')
            throw std::invalid_argument("event: expected '[' in \"" + std::string(text) + "\"");
        const auto close = stripped.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("event: missing ')' in \"" + std::string(text) + "\"");
        const std::string_view body = std::string_view(stripped).substr(pos + 1, close - pos - 1);
        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("event: piece needs two endpoints in \"" + std::string(text) + "\"");
        pieces.push_back(Interval{parse_rational(body.substr(0, comma)),
                                  parse_rational(body.substr(comma + 1))});
        pos = close + 1;
    }
    return from_pieces(std::move(pieces));
}

Event intersect(const Event& a, const Event& b) {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& pa = a.pieces();
    const auto& pb = b.pieces();
    while (i < pa.size() && j < pb.size()) {
        const Rational lo = std::max(pa[i].lo, pb[j].lo);
        const Rational hi = std::min(pa[i].hi, pb[j].hi);
        if (lo < hi) out.push_back(Interval{lo, hi});
        if (pa[i].hi <= pb[j].hi)
            ++i;
        else
            ++j;
    }
    return Event::from_pieces(std::move(out));
}

Event unite(const Event& a, const Event& b) {
    std::vector<Interval> all = a.pieces();
    all.insert(all.end(), b.pieces().begin(), b.pieces().end());
    return Event::from_pieces(std::move(all));
}

}  // namespace rax
