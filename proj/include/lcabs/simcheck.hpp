/*
 * simcheck.hpp - mechanical verification of simulation relations.
 *
 * Both systems are finite machines with trivial time scales, so the general
 * step condition over signals reduces to a one-step transfer condition on
 * the transition relation: every move of the left state must be matched by
 * an equally-labeled move of the right state into a related pair. The
 * flavors differ only in which reachable states the relation must cover
 * initially.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lcabs/fsm.hpp"
#include "lcabs/lcomplete.hpp"
#include "lcabs/relations.hpp"

namespace lcabs {

struct SimFlavor {
    enum class Kind { l_initial, asynchronous, externally_synchronous, synchronous };
    Kind kind = Kind::l_initial;
    std::size_t l = 0;  // used by l_initial only

    static SimFlavor l_initial(std::size_t l) { return {Kind::l_initial, l}; }
    static SimFlavor asynchronous() { return {Kind::asynchronous, 0}; }
    static SimFlavor externally_synchronous() {
        return {Kind::externally_synchronous, 0};
    }
    static SimFlavor synchronous() { return {Kind::synchronous, 0}; }

    std::string name() const;
};

SimFlavor parse_flavor(const std::string& name, std::size_t l);

struct Counterexample {
    State left;
    State right;      // empty for coverage failures
    Symbol symbol;    // empty for coverage failures
    Word replay;      // shortest label prefix reaching `left` in sys1
    std::string reason;
};

struct Verdict {
    bool pass = false;
    Relation certificate;  // the verified relation, on pass
    std::optional<Counterexample> counterexample;
};

/// One-step transfer condition at every pair of R. Fails with the first
/// violating (left, right, symbol) in symbol-major order and a shortest
/// replay prefix reaching the left state.
Verdict check_step(const Relation& r, const Fsm& sys1, const Fsm& sys2);

/// Coverage condition of the given flavor (which reachable left states must
/// be related to an equally-reachable right state).
Verdict check_initial(const Relation& r, const Fsm& sys1, const Fsm& sys2,
                      const SimFlavor& flavor);

/// Conjunction of coverage and step conditions.
Verdict check_relation(const Relation& r, const Fsm& sys1, const Fsm& sys2,
                       const SimFlavor& flavor);

/// Coarsest relation satisfying the step condition, by iterated pair removal
/// from the full product. Oracle: any relation passing check_step is a
/// subset of it.
Relation greatest_simulation(const Fsm& sys1, const Fsm& sys2);

struct Theorem1Item {
    std::string id;      // "i" .. "vi"
    std::string flavor;
    Verdict verdict;
};

struct Theorem1Report {
    std::size_t l = 0;
    ApproxMachine approx;
    Relation r0, rl, rx;
    LcVerdict l_complete;       // premise for item vi
    Verdict rx_verdict;         // premise: RX as l-initial self-simulation
    Verdict rl_inverse_verdict; // cross-check route for item vi
    std::vector<Theorem1Item> items;
};

/// Build the approximation and canonical relations for a trimmed machine and
/// verify every simulation statement:
///   i   0-initial, ii externally synchronous, iii asynchronous,
///   iv  synchronous (trivial time scale), v l-initial,
///   vi  l-initial bisimilarity, decided from the premises (l-completeness
///       and the RX self-simulation) and cross-validated against directly
///       checking Rl and its inverse. A disagreement between the two routes
///       throws InternalInconsistency.
Theorem1Report theorem1_report(const Fsm& sys, std::size_t l);

}  // namespace lcabs
