/*
 * quantizer.hpp - event-triggered interval quantizer front-end.
 *
 * A continuous signal over a bounded interval domain is discretized by a
 * family of possibly overlapping symbol intervals: an event fires when the
 * signal leaves the interval of its current symbol, which by continuity can
 * only happen through an endpoint. Compilation turns the quantizer into a
 * finite machine whose path language is the external behavior, in one of two
 * time-scale modes:
 *
 *   point - states are event values (initial and exit values); external time
 *           samples the signal at event instants only.
 *   set   - states are the symbols themselves; one external step covers the
 *           whole dwell interval, so a state concretizes to the full symbol
 *           interval.
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcabs/fsm.hpp"
#include "lcabs/interval.hpp"

namespace lcabs {

enum class TimeScaleMode { point, set };

struct QuantizerSpec {
    Interval domain;
    std::map<Symbol, Interval> symbols;
    std::vector<Rational> initial_values;
    TimeScaleMode mode = TimeScaleMode::point;
};

/// Structural and blocking diagnostics; empty means compilable.
/// A symbol interval blocks when it has an exit endpoint no other symbol
/// interval covers, or no exit endpoint at all (no further events).
std::vector<std::string> validate(const QuantizerSpec& spec);

/// Endpoints through which a continuous signal can leave I_G, paired with
/// every symbol whose interval contains the exit value. Closed endpoints on
/// the closed domain boundary are non-exits: the signal cannot leave the
/// domain.
std::set<std::pair<Rational, Symbol>> exit_successors(const QuantizerSpec& spec,
                                                      const Symbol& g);

struct CompiledSystem {
    Fsm fsm;
    std::map<State, IntervalSet> concretize;
    TimeScaleMode mode = TimeScaleMode::point;
};

/// Compile the quantizer into a trimmed machine. Throws Blocking when
/// validate() reports diagnostics.
CompiledSystem compile(const QuantizerSpec& spec);

/// Concretized set of signal values compatible with the recent past `zeta`:
/// the union of concretizations over all states reachable by a zeta-labeled
/// path from any reachable state. zeta empty yields the whole reachable
/// concretization.
IntervalSet reach_past(const CompiledSystem& cs, const Word& zeta);

}  // namespace lcabs
