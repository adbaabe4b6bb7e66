/*
 * lcomplete.hpp - strongest asynchronous l-complete approximation.
 *
 * The approximation is realized as a deterministic machine whose states are
 * words: the empty word, proper prefixes of initial windows, and the length-l
 * segments occurring in recurring windows. A state stores the last l symbols
 * seen, so the machine accepts exactly the domino-closure of the window set.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lcabs/fsm.hpp"
#include "lcabs/windows.hpp"

namespace lcabs {

struct ApproxMachine {
    Fsm fsm;  // states are word tokens, "^" is the empty word
    std::size_t l = 0;
};

/// Build the approximation machine from a window set. Throws EmptyWindows if
/// there are no initial windows. The result is trimmed and deterministic.
ApproxMachine approximate(const WindowSet& ws);

/// Canonical state trajectory of a word: z(k) is the full prefix while k < l
/// and the last l symbols afterwards, for k = 0..|gamma|.
std::vector<Word> z_trajectory(const Word& gamma, std::size_t l);

struct LcVerdict {
    bool pass = false;
    /// On fail: shortest word of the approximation's language missing from
    /// the machine's language.
    std::optional<Word> witness;
};

/// Decide asynchronous l-completeness of a trimmed machine via the fixpoint
/// characterization: the behavior equals its own strongest l-complete
/// approximation.
LcVerdict is_l_complete(const Fsm& m, std::size_t l);

}  // namespace lcabs
