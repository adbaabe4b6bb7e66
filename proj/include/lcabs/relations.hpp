/*
 * relations.hpp - candidate simulation relations built from recent pasts.
 *
 * R0 pairs each system state with the approximation state recording its
 * recent past (full past while shorter than l), Rl is its restriction to
 * length-l pasts, and RX pairs system states with each other whenever they
 * share some length-l recent past.
 */

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "lcabs/fsm.hpp"
#include "lcabs/interval.hpp"
#include "lcabs/lcomplete.hpp"
#include "lcabs/quantizer.hpp"

namespace lcabs {

struct Relation {
    std::string flavor = "custom";  // "R0" | "Rl" | "RX" | "custom"
    std::size_t l = 0;
    std::set<std::pair<State, State>> pairs;
    std::map<State, IntervalSet> concretization;  // optional, left states
};

/// States reachable at external step k whose preceding |zeta| labels are
/// zeta. Requires k >= |zeta| and m trimmed.
std::set<State> reach_past_at(const Fsm& m, std::size_t k, const Word& zeta);

/// Union over all k >= |zeta| of reach_past_at: the zeta-labeled path image
/// of the reachable state set.
std::set<State> recent_past_states(const Fsm& m, const Word& zeta);

Relation build_R0(const Fsm& sys, const ApproxMachine& approx);
Relation build_Rl(const Fsm& sys, const ApproxMachine& approx);
Relation build_RX(const Fsm& sys, std::size_t l);

Relation invert(const Relation& r);

/// Copy left-state concretizations from a compiled quantizer system.
void attach_concretization(Relation& r, const CompiledSystem& cs);

}  // namespace lcabs
