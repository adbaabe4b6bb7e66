#include <doctest.h>

#include "lcabs/interval.hpp"

using namespace lcabs;

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-10") == Rational(-10));
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-4.5") == Rational(-9, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(rational_token(Rational(6)) == "6");
    CHECK(rational_token(Rational(-9, 2)) == "-9/2");
    CHECK(parse_rational(rational_token(Rational(22, 7))) == Rational(22, 7));
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("interval validity and membership") {
    Interval open{-1, 6, false, false};
    CHECK(open.valid());
    CHECK(open.contains(Rational(0)));
    CHECK_FALSE(open.contains(Rational(-1)));
    CHECK_FALSE(open.contains(Rational(6)));

    Interval half{4, 10, false, true};
    CHECK(half.contains(Rational(10)));
    CHECK_FALSE(half.contains(Rational(4)));

    CHECK(Interval::point(Rational(3)).valid());
    CHECK(Interval::point(Rational(3)).contains(Rational(3)));
    CHECK_FALSE(Interval{3, 3, true, false}.valid());
    CHECK_FALSE(Interval{5, 4, true, true}.valid());
}

TEST_CASE("interval rendering") {
    CHECK(Interval{-10, -4, true, false}.to_string() == "[-10,-4)");
    CHECK(Interval{-1, 6, false, false}.to_string() == "(-1,6)");
    CHECK(Interval{4, 10, false, true}.to_string() == "(4,10]");
    CHECK(Interval::point(Rational(-6)).to_string() == "{-6}");
}

TEST_CASE("interval sets normalize") {
    IntervalSet s;
    s.insert({0, 2, true, false});
    s.insert({2, 4, true, true});  // adjacent, closed meets open
    CHECK(s.parts().size() == 1);
    CHECK(s.parts()[0] == Interval{0, 4, true, true});

    s.insert({6, 8, false, false});
    CHECK(s.parts().size() == 2);
    CHECK(s.to_string() == "[0,4] u (6,8)");
    CHECK(s.contains(Rational(3)));
    CHECK_FALSE(s.contains(Rational(5)));
    CHECK_FALSE(s.contains(Rational(6)));

    SUBCASE("open endpoints meeting open endpoints stay separate") {
        IntervalSet t;
        t.insert({0, 1, true, false});
        t.insert({1, 2, false, true});  // the point 1 itself is missing
        CHECK(t.parts().size() == 2);
        CHECK_FALSE(t.contains(Rational(1)));
        t.insert(Interval::point(Rational(1)));
        CHECK(t.parts().size() == 1);
        CHECK(t.parts()[0] == Interval{0, 2, true, true});
    }

    SUBCASE("construction order does not matter") {
        IntervalSet a({{3, 4, true, true}, {0, 1, true, true}});
        IntervalSet b;
        b.insert({0, 1, true, true});
        b.insert({3, 4, true, true});
        CHECK(a == b);
    }
}

TEST_CASE("point set rendering used by reach reports") {
    IntervalSet s({Interval::point(Rational(-6)), Interval::point(Rational(1))});
    CHECK(s.to_string() == "{-6} u {1}");
}
