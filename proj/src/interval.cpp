#include "lcabs/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lcabs {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw ParseError("empty rational");
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    auto parse_digits = [](const std::string& d) -> long long {
        if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad rational digits: " + d);
        return std::stoll(d);
    };
    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        long long num = parse_digits(s.substr(0, slash));
        long long den = parse_digits(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + text);
        r = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        long long scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) {
            if (scale > 100'000'000'000'000'000LL / 10)
                throw ParseError("decimal too long: " + text);
            scale *= 10;
        }
        r = Rational(parse_digits(ip)) +
            Rational(fp.empty() ? 0 : parse_digits(fp), scale);
    } else {
        r = Rational(parse_digits(s));
    }
    return negative ? -r : r;
}

std::string rational_token(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

bool Interval::valid() const {
    if (lo < hi) return true;
    return lo == hi && lo_closed && hi_closed;
}

bool Interval::contains(const Rational& v) const {
    if (v < lo || v > hi) return false;
    if (v == lo && !lo_closed) return false;
    if (v == hi && !hi_closed) return false;
    return true;
}

std::string Interval::to_string() const {
    if (is_point()) return "{" + rational_token(lo) + "}";
    std::string s = lo_closed ? "[" : "(";
    s += rational_token(lo) + "," + rational_token(hi);
    s += hi_closed ? "]" : ")";
    return s;
}

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
    for (const auto& iv : parts_)
        if (!iv.valid()) throw Error("invalid interval " + iv.to_string());
    normalize();
}

void IntervalSet::insert(const Interval& iv) {
    if (!iv.valid()) throw Error("invalid interval " + iv.to_string());
    parts_.push_back(iv);
    normalize();
}

void IntervalSet::insert_all(const IntervalSet& other) {
    parts_.insert(parts_.end(), other.parts_.begin(), other.parts_.end());
    normalize();
}

bool IntervalSet::contains(const Rational& v) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Interval& iv) { return iv.contains(v); });
}

void IntervalSet::normalize() {
    if (parts_.empty()) return;
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> merged;
    merged.push_back(parts_.front());
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        Interval& cur = merged.back();
        const Interval& next = parts_[i];
        bool overlaps = next.lo < cur.hi ||
                        (next.lo == cur.hi && (next.lo_closed || cur.hi_closed));
        if (overlaps) {
            if (next.hi > cur.hi) {
                cur.hi = next.hi;
                cur.hi_closed = next.hi_closed;
            } else if (next.hi == cur.hi) {
                cur.hi_closed = cur.hi_closed || next.hi_closed;
            }
        } else {
            merged.push_back(next);
        }
    }
    parts_ = std::move(merged);
}

std::string IntervalSet::to_string() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " u ";
        s += parts_[i].is_point() ? "{" + rational_token(parts_[i].lo) + "}"
                                  : parts_[i].to_string();
    }
    return s;
}

}  // namespace lcabs
