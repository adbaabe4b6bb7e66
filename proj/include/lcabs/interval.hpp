/*
 * interval.hpp - exact rational intervals and normalized interval sets.
 *
 * All endpoint arithmetic is exact; set equality is structural equality of
 * normal forms, which is what the worked reach-set comparisons require.
 */

#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "lcabs/errors.hpp"

namespace lcabs {

using Rational = boost::rational<long long>;

/// Parse "7", "-4.5", or "3/2" exactly.
Rational parse_rational(const std::string& text);

/// Canonical text form: integer, or "n/d" in lowest terms.
std::string rational_token(const Rational& r);

struct Interval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    /// lo < hi, or lo == hi with both ends closed.
    bool valid() const;
    bool contains(const Rational& v) const;
    bool is_point() const { return lo == hi; }

    static Interval point(const Rational& v) { return {v, v, true, true}; }

    auto operator<=>(const Interval&) const = default;

    std::string to_string() const;
};

/// Finite union of pairwise-disjoint, non-adjacent intervals in ascending
/// order; construction normalizes by merging overlapping or adjacent parts.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> parts);

    void insert(const Interval& iv);
    void insert_all(const IntervalSet& other);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rational& v) const;
    bool operator==(const IntervalSet&) const = default;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Interval> parts_;
};

}  // namespace lcabs
