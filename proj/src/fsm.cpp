#include "lcabs/fsm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lcabs {

std::string word_token(const Word& w) {
    if (w.empty()) return "^";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i];
    }
    return out;
}

Word parse_word_token(const std::string& token) {
    if (token == "^") return {};
    Word w;
    std::istringstream in(token);
    std::string sym;
    while (in >> sym) w.push_back(sym);
    return w;
}

void Fsm::check_well_formed() const {
    if (initial.empty()) throw Error("initial state set is empty");
    for (const auto& s : initial)
        if (!states.count(s)) throw UnknownState(s);
    for (const auto& t : transitions) {
        if (!states.count(t.src)) throw UnknownState(t.src);
        if (!states.count(t.dst)) throw UnknownState(t.dst);
        if (!alphabet.count(t.symbol)) throw UnknownSymbol(t.symbol);
    }
}

SuccessorIndex::SuccessorIndex(const Fsm& m) {
    for (const auto& t : m.transitions) post_[t.src][t.symbol].insert(t.dst);
}

const std::set<State>& SuccessorIndex::post(const State& s, const Symbol& a) const {
    auto it = post_.find(s);
    if (it == post_.end()) return empty_;
    auto jt = it->second.find(a);
    return jt == it->second.end() ? empty_ : jt->second;
}

std::set<State> SuccessorIndex::post(const std::set<State>& from, const Symbol& a) const {
    std::set<State> out;
    for (const auto& s : from) {
        const auto& succ = post(s, a);
        out.insert(succ.begin(), succ.end());
    }
    return out;
}

std::set<State> SuccessorIndex::post_any(const std::set<State>& from) const {
    std::set<State> out;
    for (const auto& s : from) {
        auto it = post_.find(s);
        if (it == post_.end()) continue;
        for (const auto& [sym, succ] : it->second) out.insert(succ.begin(), succ.end());
    }
    return out;
}

const std::set<State>& StateSetSequence::at(std::size_t k) const {
    if (k < prefix.size()) return prefix[k];
    return period[(k - prefix.size()) % period.size()];
}

Fsm trim(const Fsm& m) {
    m.check_well_formed();
    std::set<State> alive = m.states;
    std::set<Transition> trans = m.transitions;

    bool changed = true;
    while (changed) {
        changed = false;

        // drop states with no outgoing transition
        std::set<State> has_out;
        for (const auto& t : trans) has_out.insert(t.src);
        for (auto it = alive.begin(); it != alive.end();) {
            if (!has_out.count(*it)) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }

        // drop transitions touching dead states
        for (auto it = trans.begin(); it != trans.end();) {
            if (!alive.count(it->src) || !alive.count(it->dst)) {
                it = trans.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }

        // restrict to states reachable from surviving initial states
        std::set<State> init;
        for (const auto& s : m.initial)
            if (alive.count(s)) init.insert(s);
        std::set<State> reach = init;
        std::deque<State> queue(init.begin(), init.end());
        std::map<State, std::set<State>> succ;
        for (const auto& t : trans) succ[t.src].insert(t.dst);
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (const auto& n : succ[s])
                if (reach.insert(n).second) queue.push_back(n);
        }
        if (reach.size() != alive.size()) {
            alive = reach;
            changed = true;
        }
    }

    Fsm out;
    out.alphabet = m.alphabet;
    out.states = alive;
    for (const auto& s : m.initial)
        if (alive.count(s)) out.initial.insert(s);
    for (const auto& t : trans)
        if (alive.count(t.src) && alive.count(t.dst)) out.transitions.insert(t);
    if (out.initial.empty()) throw EmptyAfterTrim();
    return out;
}

std::set<State> reachable_at(const Fsm& m, std::size_t k) {
    SuccessorIndex idx(m);
    std::set<State> layer = m.initial;
    for (std::size_t i = 0; i < k; ++i) layer = idx.post_any(layer);
    return layer;
}

StateSetSequence reachable_sequence(const Fsm& m) {
    SuccessorIndex idx(m);
    std::vector<std::set<State>> seq;
    std::map<std::set<State>, std::size_t> seen;
    std::set<State> layer = m.initial;
    while (!seen.count(layer)) {
        seen[layer] = seq.size();
        seq.push_back(layer);
        layer = idx.post_any(layer);
    }
    std::size_t start = seen[layer];
    StateSetSequence out;
    out.prefix.assign(seq.begin(), seq.begin() + static_cast<long>(start));
    out.period.assign(seq.begin() + static_cast<long>(start), seq.end());
    return out;
}

namespace {

// Subset-construction view: deterministic successor of a state subset.
using DetState = std::set<State>;

struct ProductNode {
    DetState left, right;  // either side may be empty (dead)
    bool operator<(const ProductNode& o) const {
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
};

}  // namespace

LangCompare prefix_language_compare(const Fsm& m1, const Fsm& m2) {
    if (m1.alphabet != m2.alphabet) throw AlphabetMismatch();
    SuccessorIndex idx1(m1), idx2(m2);

    LangCompare result{LangOrder::equal, std::nullopt, std::nullopt};
    std::set<ProductNode> visited;
    std::deque<std::pair<ProductNode, Word>> queue;
    ProductNode root{m1.initial, m2.initial};
    visited.insert(root);
    queue.emplace_back(root, Word{});

    while (!queue.empty() && !(result.only_in_m1 && result.only_in_m2)) {
        auto [node, word] = queue.front();
        queue.pop_front();
        for (const auto& a : m1.alphabet) {
            DetState n1 = idx1.post(node.left, a);
            DetState n2 = idx2.post(node.right, a);
            if (n1.empty() && n2.empty()) continue;
            Word w = word;
            w.push_back(a);
            if (n2.empty() && !result.only_in_m1) result.only_in_m1 = w;
            if (n1.empty() && !result.only_in_m2) result.only_in_m2 = w;
            if (n1.empty() || n2.empty()) continue;  // dead side stays dead
            ProductNode next{std::move(n1), std::move(n2)};
            if (visited.insert(next).second) queue.emplace_back(next, std::move(w));
        }
    }

    if (result.only_in_m1 && result.only_in_m2)
        result.order = LangOrder::incomparable;
    else if (result.only_in_m1)
        result.order = LangOrder::m2_strict_subset;
    else if (result.only_in_m2)
        result.order = LangOrder::m1_strict_subset;
    else
        result.order = LangOrder::equal;
    return result;
}

std::set<Word> enumerate_paths(const Fsm& m, std::size_t depth, std::size_t node_budget) {
    SuccessorIndex idx(m);
    std::set<Word> words;
    words.insert(Word{});
    std::size_t nodes = 0;

    // frontier of (state, word) pairs; words deduplicated via the result set
    std::deque<std::pair<State, Word>> queue;
    for (const auto& s : m.initial) queue.emplace_back(s, Word{});
    while (!queue.empty()) {
        auto [s, w] = queue.front();
        queue.pop_front();
        if (w.size() >= depth) continue;
        for (const auto& a : m.alphabet) {
            for (const auto& n : idx.post(s, a)) {
                if (++nodes > node_budget) throw DepthBudgetExceeded(node_budget);
                Word ext = w;
                ext.push_back(a);
                words.insert(ext);
                queue.emplace_back(n, std::move(ext));
            }
        }
    }
    return words;
}

Word shortest_replay(const Fsm& m, const State& target) {
    if (!m.states.count(target)) throw UnknownState(target);
    std::map<State, std::pair<State, Symbol>> parent;
    std::set<State> seen(m.initial.begin(), m.initial.end());
    std::deque<State> queue(m.initial.begin(), m.initial.end());
    SuccessorIndex idx(m);
    auto backtrack = [&](State s) {
        Word w;
        while (parent.count(s)) {
            w.push_back(parent[s].second);
            s = parent[s].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (seen.count(target)) return {};
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (const auto& a : m.alphabet) {
            for (const auto& n : idx.post(s, a)) {
                if (seen.insert(n).second) {
                    parent[n] = {s, a};
                    if (n == target) return backtrack(n);
                    queue.push_back(n);
                }
            }
        }
    }
    throw UnknownState(target);  // unreachable state in a trimmed machine
}

std::optional<Word> replay_at(const Fsm& m, std::size_t k, const State& target) {
    SuccessorIndex idx(m);
    // parent pointer per (layer, state)
    std::vector<std::map<State, std::pair<State, Symbol>>> layers(k + 1);
    std::set<State> layer = m.initial;
    for (const auto& s : layer) layers[0][s] = {"", ""};
    for (std::size_t i = 0; i < k; ++i) {
        std::set<State> next;
        for (const auto& s : layer) {
            for (const auto& a : m.alphabet) {
                for (const auto& n : idx.post(s, a)) {
                    if (!layers[i + 1].count(n)) layers[i + 1][n] = {s, a};
                    next.insert(n);
                }
            }
        }
        layer = std::move(next);
    }
    if (!layer.count(target)) return std::nullopt;
    Word w;
    State s = target;
    for (std::size_t i = k; i > 0; --i) {
        auto [p, a] = layers[i].at(s);
        w.push_back(a);
        s = p;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::string to_dot(const Fsm& m) {
    std::ostringstream out;
    out << "digraph fsm {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::size_t i = 0;
    for (const auto& s : m.initial) {
        out << "  \"__init" << i << "\" [shape=none, style=invis, label=\"\"];\n";
        out << "  \"__init" << i << "\" -> \"" << s << "\";\n";
        ++i;
    }
    for (const auto& t : m.transitions)
        out << "  \"" << t.src << "\" -> \"" << t.dst << "\" [label=\"" << t.symbol
            << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace lcabs
