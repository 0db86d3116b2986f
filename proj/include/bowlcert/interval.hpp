#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "bowlcert/errors.hpp"

namespace bowlcert {

/// Closed interval [lo, hi] with outward-rounded endpoint arithmetic.
///
/// Every operation returns an interval that encloses the exact real-number
/// image of its operands. Round-to-nearest results are stepped outward by
/// one unit in the last place, which dominates the <= 1/2 ulp rounding
/// error of each primitive operation. No rounding-mode switching is used,
/// so values are safe to share across threads.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double point) : lo(point), hi(point) {}  // a double is exact
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(l <= h) || !std::isfinite(l) || !std::isfinite(h))
            throw DomainError("Interval: endpoints must be finite and ordered");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
};

inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline bool subset(const Interval& inner, const Interval& outer) {
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

inline Interval add(Interval a, Interval b) {
    return Interval{next_down(a.lo + b.lo), next_up(a.hi + b.hi)};
}

inline Interval sub(Interval a, Interval b) {
    return Interval{next_down(a.lo - b.hi), next_up(a.hi - b.lo)};
}

inline Interval neg(Interval a) { return Interval{-a.hi, -a.lo}; }  // exact

inline Interval mul(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval{next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
                    next_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

inline Interval sqr(Interval a) {
    if (a.lo >= 0.0)
        return Interval{std::max(0.0, next_down(a.lo * a.lo)), next_up(a.hi * a.hi)};
    if (a.hi <= 0.0)
        return Interval{std::max(0.0, next_down(a.hi * a.hi)), next_up(a.lo * a.lo)};
    return Interval{0.0, next_up(std::max(a.lo * a.lo, a.hi * a.hi))};
}

inline Interval recip(Interval a) {
    if (a.contains_zero())
        throw DivisionByIntervalContainingZero("recip: interval contains zero");
    return Interval{next_down(1.0 / a.hi), next_up(1.0 / a.lo)};
}

inline Interval div(Interval a, Interval b) {
    if (b.contains_zero())
        throw DivisionByIntervalContainingZero("div: divisor contains zero");
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi;
    const double q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return Interval{next_down(std::min(std::min(q1, q2), std::min(q3, q4))),
                    next_up(std::max(std::max(q1, q2), std::max(q3, q4)))};
}

/// Enclosure of {e^x : x in a}. The scalar exp is assumed faithfully
/// rounded; a two-ulp outward step absorbs its error.
inline Interval exp_iv(Interval a) {
    double lo = std::exp(a.lo);
    double hi = std::exp(a.hi);
    lo = next_down(next_down(lo));
    if (lo < 0.0) lo = 0.0;
    hi = next_up(next_up(hi));
    return Interval{lo, hi};
}

/// Enclosure of f over x for a map f monotone on x, given a validated
/// relative error bound of the scalar evaluation.
template <class F>
Interval bound_monotone(F&& f, Interval x, double rel_slack) {
    const double y1 = f(x.lo);
    const double y2 = f(x.hi);
    double lo = std::min(y1, y2);
    double hi = std::max(y1, y2);
    lo = next_down(lo - std::abs(lo) * rel_slack);
    hi = next_up(hi + std::abs(hi) * rel_slack);
    return Interval{lo, hi};
}

// Enclosures of pointwise min/max; exact, no stepping required.
inline Interval imin(Interval a, Interval b) {
    return Interval{std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
inline Interval imax(Interval a, Interval b) {
    return Interval{std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

/// Enclosure of the exact rational num/den.
inline Interval ratio(double num, double den) { return div(Interval(num), Interval(den)); }

inline Interval operator+(Interval a, Interval b) { return add(a, b); }
inline Interval operator-(Interval a, Interval b) { return sub(a, b); }
inline Interval operator*(Interval a, Interval b) { return mul(a, b); }
inline Interval operator/(Interval a, Interval b) { return div(a, b); }
inline Interval operator-(Interval a) { return neg(a); }

}  // namespace bowlcert
