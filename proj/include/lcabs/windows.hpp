/*
 * windows.hpp - initial and recurring behavior windows of length l+1.
 *
 * These two window families fully parameterize the strongest asynchronous
 * l-complete approximation of a machine's behavior: the initial windows are
 * the length-(l+1) label prefixes, the recurring windows are the length-(l+1)
 * label segments occurring anywhere along an infinite path.
 */

#pragma once

#include <cstddef>
#include <set>

#include "lcabs/fsm.hpp"

namespace lcabs {

struct WindowSet {
    std::size_t l = 0;
    std::set<Symbol> alphabet;  // of the originating machine
    std::set<Word> initial;     // each of length l+1
    std::set<Word> recurring;   // each of length l+1; initial subset for machines
};

/// Windows of a trimmed machine. Recurring windows are collected from every
/// state: each state of a trimmed machine occurs at some external time, so
/// the union over time indices collapses to the union over states.
WindowSet extract_windows(const Fsm& m, std::size_t l);

/// Independent oracle: enumerate all label paths of length `horizon` from the
/// initial states and slice every length-(l+1) segment. Agrees with
/// extract_windows once horizon >= |states|*(l+1) + l + 1.
WindowSet windows_oracle(const Fsm& m, std::size_t l, std::size_t horizon,
                         std::size_t node_budget = kDefaultNodeBudget);

}  // namespace lcabs
