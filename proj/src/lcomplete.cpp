#include "lcabs/lcomplete.hpp"

#include <deque>

namespace lcabs {

ApproxMachine approximate(const WindowSet& ws) {
    if (ws.initial.empty()) throw EmptyWindows();
    const std::size_t l = ws.l;

    std::set<Symbol> alphabet = ws.alphabet;
    for (const auto& w : ws.recurring)
        for (const auto& a : w) alphabet.insert(a);
    for (const auto& w : ws.initial)
        for (const auto& a : w) alphabet.insert(a);

    // prefixes of initial windows, for the build-up phase |state| < l
    std::set<Word> initial_prefixes;
    for (const auto& w : ws.initial)
        for (std::size_t n = 1; n <= w.size(); ++n)
            initial_prefixes.insert(Word(w.begin(), w.begin() + static_cast<long>(n)));

    Fsm m;
    m.alphabet = alphabet;
    m.initial = {word_token(Word{})};

    std::set<Word> visited;
    std::deque<Word> queue;
    queue.push_back(Word{});
    visited.insert(Word{});
    while (!queue.empty()) {
        Word zeta = queue.front();
        queue.pop_front();
        m.states.insert(word_token(zeta));
        for (const auto& a : alphabet) {
            Word ext = zeta;
            ext.push_back(a);
            std::optional<Word> target;
            if (zeta.size() < l) {
                if (initial_prefixes.count(ext)) target = ext;
            } else {
                if (ws.recurring.count(ext))
                    target = Word(ext.begin() + 1, ext.end());
            }
            if (!target) continue;
            m.transitions.insert({word_token(zeta), a, word_token(*target)});
            if (visited.insert(*target).second) queue.push_back(*target);
        }
    }
    for (const auto& w : visited) m.states.insert(word_token(w));

    return ApproxMachine{trim(m), l};
}

std::vector<Word> z_trajectory(const Word& gamma, std::size_t l) {
    std::vector<Word> z;
    z.reserve(gamma.size() + 1);
    for (std::size_t k = 0; k <= gamma.size(); ++k) {
        std::size_t from = k < l ? 0 : k - l;
        z.emplace_back(gamma.begin() + static_cast<long>(from),
                       gamma.begin() + static_cast<long>(k));
    }
    return z;
}

LcVerdict is_l_complete(const Fsm& m, std::size_t l) {
    ApproxMachine am = approximate(extract_windows(m, l));
    LangCompare cmp = prefix_language_compare(m, am.fsm);
    switch (cmp.order) {
        case LangOrder::equal:
            return {true, std::nullopt};
        case LangOrder::m1_strict_subset:
            return {false, cmp.only_in_m2};
        default:
            // the approximation's language always contains the machine's
            throw InternalInconsistency("approximation lost behavior of its machine");
    }
}

}  // namespace lcabs
