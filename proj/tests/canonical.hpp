// Canonical renaming of deterministic machines, for isomorphism checks.
#pragma once

#include <deque>
#include <map>

#include "lcabs/fsm.hpp"

namespace testgen {

// Rename the states of a deterministic single-initial machine by BFS order,
// visiting successors in alphabetical symbol order. Two such machines are
// isomorphic iff their canonical forms are identical.
inline lcabs::Fsm canonical_form(const lcabs::Fsm& m) {
    using namespace lcabs;
    if (m.initial.size() != 1)
        throw Error("canonical_form requires a unique initial state");
    SuccessorIndex idx(m);
    std::map<State, std::string> rename;
    std::deque<State> queue{*m.initial.begin()};
    rename[*m.initial.begin()] = "n0";
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (const auto& a : m.alphabet) {
            const auto& succ = idx.post(s, a);
            if (succ.size() > 1)
                throw Error("canonical_form requires a deterministic machine");
            for (const auto& t : succ) {
                if (!rename.count(t)) {
                    rename[t] = "n" + std::to_string(rename.size());
                    queue.push_back(t);
                }
            }
        }
    }
    if (rename.size() != m.states.size())
        throw Error("canonical_form requires every state reachable");
    Fsm out;
    out.alphabet = m.alphabet;
    for (const auto& [s, id] : rename) out.states.insert(id);
    out.initial = {"n0"};
    for (const auto& t : m.transitions)
        out.transitions.insert({rename.at(t.src), t.symbol, rename.at(t.dst)});
    return out;
}

inline bool isomorphic(const lcabs::Fsm& m1, const lcabs::Fsm& m2) {
    lcabs::Fsm c1 = canonical_form(m1), c2 = canonical_form(m2);
    return c1.alphabet == c2.alphabet && c1.states == c2.states &&
           c1.transitions == c2.transitions;
}

}  // namespace testgen
