/*
 * fsm.hpp - finite state machines over a finite alphabet.
 *
 * Machines here carry no acceptance condition: the object of interest is the
 * set of infinite labeled paths from the initial states. After trimming,
 * every state is reachable and has an outgoing transition, so the finite
 * prefix language faithfully represents the prefixes of that infinite
 * behavior and language questions reduce to prefix-language questions.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcabs/errors.hpp"

namespace lcabs {

using Symbol = std::string;
using State = std::string;
using Word = std::vector<Symbol>;

/// Serialize a word as space-joined symbol tokens; the empty word is "^".
std::string word_token(const Word& w);
Word parse_word_token(const std::string& token);

struct Transition {
    State src;
    Symbol symbol;
    State dst;
    auto operator<=>(const Transition&) const = default;
};

struct Fsm {
    std::set<Symbol> alphabet;
    std::set<State> states;
    std::set<State> initial;
    std::set<Transition> transitions;

    /// Throws Error on structural violations (dangling states, foreign
    /// symbols, empty or non-contained initial set). Liveness is not
    /// required here; that is what trim() establishes.
    void check_well_formed() const;
};

/// Transition relation indexed by (source, symbol).
class SuccessorIndex {
public:
    explicit SuccessorIndex(const Fsm& m);

    const std::set<State>& post(const State& s, const Symbol& a) const;
    std::set<State> post(const std::set<State>& from, const Symbol& a) const;
    std::set<State> post_any(const std::set<State>& from) const;

private:
    std::map<State, std::map<Symbol, std::set<State>>> post_;
    std::set<State> empty_;
};

/// Eventually periodic sequence of state subsets, index k >= prefix.size()
/// wraps into the period.
struct StateSetSequence {
    std::vector<std::set<State>> prefix;
    std::vector<std::set<State>> period;  // length >= 1

    const std::set<State>& at(std::size_t k) const;
};

/// Largest sub-machine in which every state is reachable from an initial
/// state and has an outgoing transition. Throws EmptyAfterTrim if nothing
/// survives.
Fsm trim(const Fsm& m);

/// States occurring at synchronous step k on infinite paths (m trimmed).
std::set<State> reachable_at(const Fsm& m, std::size_t k);

/// The whole sequence k -> reachable_at(m, k) via lasso detection.
StateSetSequence reachable_sequence(const Fsm& m);

enum class LangOrder { equal, m1_strict_subset, m2_strict_subset, incomparable };

struct LangCompare {
    LangOrder order;
    std::optional<Word> only_in_m1;  // shortest witness, when m2 misses words
    std::optional<Word> only_in_m2;
};

/// Compare the prefix-closed path languages of two trimmed machines over the
/// same alphabet, via subset construction and product exploration. Witnesses
/// are minimal-length words of the symmetric difference.
LangCompare prefix_language_compare(const Fsm& m1, const Fsm& m2);

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Exact set of label sequences of paths of length <= depth, by exhaustive
/// enumeration. Brute-force oracle; throws DepthBudgetExceeded when the
/// visited-node budget runs out.
std::set<Word> enumerate_paths(const Fsm& m, std::size_t depth,
                               std::size_t node_budget = kDefaultNodeBudget);

/// Shortest label word reaching `target` from an initial state, by BFS.
Word shortest_replay(const Fsm& m, const State& target);

/// A label word of length exactly k whose run ends in `target`, or nullopt.
std::optional<Word> replay_at(const Fsm& m, std::size_t k, const State& target);

/// Graphviz export: one digraph, rankdir=LR, initial states marked by an
/// incoming edge from an invisible node.
std::string to_dot(const Fsm& m);

}  // namespace lcabs
