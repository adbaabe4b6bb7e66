#include "lcabs/windows.hpp"

#include <deque>
#include <utility>

namespace lcabs {

namespace {

// All label sequences of length exactly `len` starting in `start`.
void paths_from(const SuccessorIndex& idx, const Fsm& m, const State& start,
                std::size_t len, std::set<Word>& out) {
    std::deque<std::pair<State, Word>> queue;
    queue.emplace_back(start, Word{});
    while (!queue.empty()) {
        auto [s, w] = queue.front();
        queue.pop_front();
        if (w.size() == len) {
            out.insert(std::move(w));
            continue;
        }
        for (const auto& a : m.alphabet) {
            for (const auto& n : idx.post(s, a)) {
                Word ext = w;
                ext.push_back(a);
                queue.emplace_back(n, std::move(ext));
            }
        }
    }
}

}  // namespace

WindowSet extract_windows(const Fsm& m, std::size_t l) {
    SuccessorIndex idx(m);
    WindowSet ws;
    ws.l = l;
    ws.alphabet = m.alphabet;
    for (const auto& s : m.initial) paths_from(idx, m, s, l + 1, ws.initial);
    for (const auto& s : m.states) paths_from(idx, m, s, l + 1, ws.recurring);
    return ws;
}

WindowSet windows_oracle(const Fsm& m, std::size_t l, std::size_t horizon,
                         std::size_t node_budget) {
    if (horizon < l + 1) throw Error("windows_oracle: horizon must be >= l+1");
    WindowSet ws;
    ws.l = l;
    ws.alphabet = m.alphabet;

    // Walk all paths of length `horizon` and slice every window g|[k,k+l].
    // Paths sharing (current state, last l labels) produce the same windows
    // from here on, so the frontier is deduplicated on that pair per depth.
    using Node = std::pair<State, Word>;  // word = at most the last l labels
    std::set<Node> frontier;
    for (const auto& s : m.initial) frontier.insert({s, Word{}});
    SuccessorIndex idx(m);
    std::size_t nodes = 0;

    for (std::size_t depth = 0; depth < horizon; ++depth) {
        std::set<Node> next;
        for (const auto& [s, hist] : frontier) {
            for (const auto& a : m.alphabet) {
                for (const auto& n : idx.post(s, a)) {
                    if (++nodes > node_budget) throw DepthBudgetExceeded(node_budget);
                    Word win = hist;
                    win.push_back(a);
                    if (win.size() == l + 1) {
                        ws.recurring.insert(win);
                        if (depth == l) ws.initial.insert(win);
                        win.erase(win.begin());
                    }
                    next.insert({n, std::move(win)});
                }
            }
        }
        frontier = std::move(next);
    }
    return ws;
}

}  // namespace lcabs
