// Shared machine and quantizer fixtures used across the test binaries.
#pragma once

#include "lcabs/fsm.hpp"
#include "lcabs/quantizer.hpp"

namespace fixtures {

using namespace lcabs;

// Three-state machine: x2 -a-> {x1, x3}, x1 -b-> x2, x3 -c-> x2.
inline Fsm psi1() {
    Fsm m;
    m.alphabet = {"a", "b", "c"};
    m.states = {"x1", "x2", "x3"};
    m.initial = {"x2"};
    m.transitions = {
        {"x2", "a", "x1"}, {"x1", "b", "x2"}, {"x2", "a", "x3"}, {"x3", "c", "x2"}};
    return m;
}

// Deterministic machine accepting the same labels with states named after the
// last symbol seen.
inline Fsm psi2() {
    Fsm m;
    m.alphabet = {"a", "b", "c"};
    m.states = {"^", "a", "b", "c"};
    m.initial = {"^"};
    m.transitions = {{"^", "a", "a"},
                     {"a", "b", "b"},
                     {"a", "c", "c"},
                     {"b", "a", "a"},
                     {"c", "a", "a"}};
    return m;
}

// The 5-state, 8-transition last-symbol machine of the tank level system.
inline Fsm tank_abstraction() {
    Fsm m;
    m.alphabet = {"m2", "m1", "p1", "p2"};
    m.states = {"^", "m2", "m1", "p1", "p2"};
    m.initial = {"^"};
    m.transitions = {{"^", "m2", "m2"},  {"^", "p2", "p2"},  {"m2", "m1", "m1"},
                     {"m1", "m2", "m2"}, {"m1", "p1", "p1"}, {"p1", "m1", "m1"},
                     {"p1", "p2", "p2"}, {"p2", "p1", "p1"}};
    return m;
}

// Cycle producing (a a b)^omega.
inline Fsm aab() {
    Fsm m;
    m.alphabet = {"a", "b"};
    m.states = {"q0", "q1", "q2"};
    m.initial = {"q0"};
    m.transitions = {{"q0", "a", "q1"}, {"q1", "a", "q2"}, {"q2", "b", "q0"}};
    return m;
}

// Water tank quantizer: four overlapping level ranges over [-10, 10],
// initial level at either domain boundary.
inline QuantizerSpec tank(TimeScaleMode mode) {
    QuantizerSpec spec;
    spec.domain = {-10, 10, true, true};
    spec.symbols["m2"] = {-10, -4, true, false};
    spec.symbols["m1"] = {-6, 1, false, false};
    spec.symbols["p1"] = {-1, 6, false, false};
    spec.symbols["p2"] = {4, 10, false, true};
    spec.initial_values = {-10, 10};
    spec.mode = mode;
    return spec;
}

}  // namespace fixtures
