// Independently coded certificate checkers. These deliberately avoid the
// library's SuccessorIndex and scan raw transition sets, so they share no
// traversal code with the verdicts they audit.
#pragma once

#include "lcabs/relations.hpp"
#include "lcabs/simcheck.hpp"

namespace testgen {

using namespace lcabs;

// One-step transfer condition, straight off the transition sets.
inline bool verify_step_certificate(const Relation& r, const Fsm& sys1,
                                    const Fsm& sys2) {
    for (const auto& [x1, x2] : r.pairs)
        for (const auto& t1 : sys1.transitions) {
            if (t1.src != x1) continue;
            bool matched = false;
            for (const auto& t2 : sys2.transitions)
                if (t2.src == x2 && t2.symbol == t1.symbol &&
                    r.pairs.count({t1.dst, t2.dst}))
                    matched = true;
            if (!matched) return false;
        }
    return true;
}

// A step counterexample replays when (a) the replay word runs from an initial
// state of sys1 to the left state, (b) the left state can take the symbol,
// and (c) no symbol-successor of the right state is related to some
// symbol-successor of the left state that itself has no related partner.
inline bool replay_step_counterexample(const Counterexample& c, const Relation& r,
                                       const Fsm& sys1, const Fsm& sys2) {
    // (a) run the replay word
    std::set<State> layer = sys1.initial;
    for (const auto& a : c.replay) {
        std::set<State> next;
        for (const auto& t : sys1.transitions)
            if (layer.count(t.src) && t.symbol == a) next.insert(t.dst);
        layer = next;
    }
    if (!layer.count(c.left)) return false;
    if (!r.pairs.count({c.left, c.right})) return false;
    // (b)+(c): some left successor under the symbol has no related partner
    for (const auto& t1 : sys1.transitions) {
        if (t1.src != c.left || t1.symbol != c.symbol) continue;
        bool matched = false;
        for (const auto& t2 : sys2.transitions)
            if (t2.src == c.right && t2.symbol == c.symbol &&
                r.pairs.count({t1.dst, t2.dst}))
                matched = true;
        if (!matched) return true;
    }
    return false;
}

}  // namespace testgen
