#include <doctest.h>

#include "fixtures.hpp"
#include "lcabs/fsm.hpp"

using namespace lcabs;

TEST_CASE("word tokens round-trip") {
    CHECK(word_token({}) == "^");
    CHECK(word_token({"a", "b"}) == "a b");
    CHECK(parse_word_token("^") == Word{});
    CHECK(parse_word_token("m2 m1") == Word{"m2", "m1"});
    CHECK(parse_word_token(word_token({"p1", "p2", "p1"})) == Word{"p1", "p2", "p1"});
}

TEST_CASE("well-formedness rejects structural violations") {
    Fsm m = fixtures::aab();
    CHECK_NOTHROW(m.check_well_formed());

    Fsm bad = m;
    bad.transitions.insert({"q0", "z", "q1"});  // foreign symbol
    CHECK_THROWS_AS(bad.check_well_formed(), Error);

    bad = m;
    bad.transitions.insert({"q0", "a", "ghost"});  // dangling state
    CHECK_THROWS_AS(bad.check_well_formed(), Error);

    bad = m;
    bad.initial.clear();
    CHECK_THROWS_AS(bad.check_well_formed(), Error);
}

TEST_CASE("trim removes unreachable and dead states") {
    Fsm m = fixtures::aab();
    m.states.insert("island");                        // unreachable
    m.states.insert("trap");                          // reachable but dead
    m.transitions.insert({"q0", "b", "trap"});
    Fsm t = trim(m);
    CHECK(t.states == std::set<State>{"q0", "q1", "q2"});
    CHECK(t.transitions.size() == 3);

    // removing a dead state can kill its predecessors transitively
    Fsm chain;
    chain.alphabet = {"a"};
    chain.states = {"s0", "s1", "s2"};
    chain.initial = {"s0"};
    chain.transitions = {{"s0", "a", "s1"}, {"s1", "a", "s2"}};
    CHECK_THROWS_AS(trim(chain), EmptyAfterTrim);
}

TEST_CASE("reachable_at follows the synchronous layer sequence") {
    Fsm m = trim(fixtures::aab());
    CHECK(reachable_at(m, 0) == std::set<State>{"q0"});
    CHECK(reachable_at(m, 1) == std::set<State>{"q1"});
    CHECK(reachable_at(m, 2) == std::set<State>{"q2"});
    CHECK(reachable_at(m, 3) == std::set<State>{"q0"});
    CHECK(reachable_at(m, 300) == std::set<State>{"q0"});

    StateSetSequence seq = reachable_sequence(m);
    CHECK(seq.period.size() == 3);
    for (std::size_t k = 0; k < 12; ++k) CHECK(seq.at(k) == reachable_at(m, k));
}

TEST_CASE("prefix language comparison finds minimal witnesses") {
    Fsm p1 = trim(fixtures::psi1());
    Fsm p2 = trim(fixtures::psi2());

    SUBCASE("equal languages") {
        LangCompare c = prefix_language_compare(p1, p2);
        CHECK(c.order == LangOrder::equal);
        CHECK_FALSE(c.only_in_m1.has_value());
        CHECK_FALSE(c.only_in_m2.has_value());
    }

    SUBCASE("strict subset with shortest witness") {
        // remove the c-branch: language shrinks to (ab)* prefixes
        Fsm small;
        small.alphabet = {"a", "b", "c"};
        small.states = {"x1", "x2"};
        small.initial = {"x2"};
        small.transitions = {{"x2", "a", "x1"}, {"x1", "b", "x2"}};
        LangCompare c = prefix_language_compare(trim(small), p2);
        CHECK(c.order == LangOrder::m1_strict_subset);
        REQUIRE(c.only_in_m2.has_value());
        CHECK(*c.only_in_m2 == Word{"a", "c"});
        LangCompare rev = prefix_language_compare(p2, trim(small));
        CHECK(rev.order == LangOrder::m2_strict_subset);
        REQUIRE(rev.only_in_m1.has_value());
        CHECK(*rev.only_in_m1 == Word{"a", "c"});
    }

    SUBCASE("incomparable languages give both witnesses") {
        Fsm aa, bb;
        aa.alphabet = bb.alphabet = {"a", "b"};
        aa.states = {"s"};
        aa.initial = {"s"};
        aa.transitions = {{"s", "a", "s"}};
        bb.states = {"s"};
        bb.initial = {"s"};
        bb.transitions = {{"s", "b", "s"}};
        LangCompare c = prefix_language_compare(aa, bb);
        CHECK(c.order == LangOrder::incomparable);
        REQUIRE(c.only_in_m1.has_value());
        REQUIRE(c.only_in_m2.has_value());
        CHECK(*c.only_in_m1 == Word{"a"});
        CHECK(*c.only_in_m2 == Word{"b"});
    }

    SUBCASE("alphabet mismatch is refused") {
        Fsm other = trim(fixtures::aab());
        CHECK_THROWS_AS(prefix_language_compare(p1, other), AlphabetMismatch);
    }
}

TEST_CASE("path enumeration is exact and budget-limited") {
    Fsm m = trim(fixtures::aab());
    std::set<Word> paths = enumerate_paths(m, 4);
    // exactly one word of each length 0..4 along (aab)^omega
    CHECK(paths.size() == 5);
    CHECK(paths.count(Word{}));
    CHECK(paths.count(Word{"a", "a", "b", "a"}));
    CHECK_FALSE(paths.count(Word{"a", "b"}));

    CHECK_THROWS_AS(enumerate_paths(trim(fixtures::psi1()), 30, 100),
                    DepthBudgetExceeded);
}

TEST_CASE("replays") {
    Fsm m = trim(fixtures::psi1());
    CHECK(shortest_replay(m, "x2") == Word{});
    CHECK(shortest_replay(m, "x1") == Word{"a"});
    CHECK(shortest_replay(m, "x3") == Word{"a"});

    CHECK(replay_at(m, 0, "x2") == Word{});
    CHECK(replay_at(m, 2, "x2") == Word{"a", "b"});
    CHECK_FALSE(replay_at(m, 1, "x2").has_value());
    REQUIRE(replay_at(m, 3, "x1").has_value());
    CHECK(replay_at(m, 3, "x1")->size() == 3);
}

TEST_CASE("dot export marks initial states and all transitions") {
    Fsm m = trim(fixtures::aab());
    std::string dot = to_dot(m);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=LR") != std::string::npos);
    CHECK(dot.find("style=invis") != std::string::npos);
    CHECK(dot.find("label=\"b\"") != std::string::npos);
    CHECK(dot.find("\"q2\" -> \"q0\"") != std::string::npos);
}
