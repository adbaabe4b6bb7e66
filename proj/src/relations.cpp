#include "lcabs/relations.hpp"

namespace lcabs {

std::set<State> reach_past_at(const Fsm& m, std::size_t k, const Word& zeta) {
    if (k < zeta.size()) throw Error("reach_past_at: k < |zeta|");
    for (const auto& a : zeta)
        if (!m.alphabet.count(a)) throw UnknownSymbol(a);
    SuccessorIndex idx(m);
    std::set<State> layer = m.initial;
    for (std::size_t i = 0; i < k - zeta.size(); ++i) layer = idx.post_any(layer);
    for (const auto& a : zeta) layer = idx.post(layer, a);
    return layer;
}

std::set<State> recent_past_states(const Fsm& m, const Word& zeta) {
    for (const auto& a : zeta)
        if (!m.alphabet.count(a)) throw UnknownSymbol(a);
    // post distributes over union, so the union over k collapses to the
    // zeta-image of the full reachable set (all states, once trimmed)
    SuccessorIndex idx(m);
    std::set<State> layer = m.states;
    for (const auto& a : zeta) layer = idx.post(layer, a);
    return layer;
}

Relation build_R0(const Fsm& sys, const ApproxMachine& approx) {
    Relation r;
    r.flavor = "R0";
    r.l = approx.l;
    for (const auto& token : approx.fsm.states) {
        Word zeta = parse_word_token(token);
        std::set<State> left = zeta.size() < approx.l
                                   ? reach_past_at(sys, zeta.size(), zeta)
                                   : recent_past_states(sys, zeta);
        for (const auto& xi : left) r.pairs.insert({xi, token});
    }
    return r;
}

Relation build_Rl(const Fsm& sys, const ApproxMachine& approx) {
    Relation r = build_R0(sys, approx);
    r.flavor = "Rl";
    for (auto it = r.pairs.begin(); it != r.pairs.end();) {
        if (parse_word_token(it->second).size() != approx.l)
            it = r.pairs.erase(it);
        else
            ++it;
    }
    return r;
}

Relation build_RX(const Fsm& sys, std::size_t l) {
    Relation r;
    r.flavor = "RX";
    r.l = l;
    std::set<Word> pasts;
    if (l == 0)
        pasts.insert(Word{});
    else
        pasts = extract_windows(sys, l - 1).recurring;  // all length-l segments
    for (const auto& zeta : pasts) {
        auto xs = recent_past_states(sys, zeta);
        for (const auto& a : xs)
            for (const auto& b : xs) r.pairs.insert({a, b});
    }
    return r;
}

Relation invert(const Relation& r) {
    Relation out;
    out.flavor = r.flavor == "custom" ? "custom" : r.flavor + "-inverse";
    out.l = r.l;
    for (const auto& [a, b] : r.pairs) out.pairs.insert({b, a});
    return out;
}

void attach_concretization(Relation& r, const CompiledSystem& cs) {
    r.concretization.clear();
    for (const auto& [left, right] : r.pairs) {
        auto it = cs.concretize.find(left);
        if (it != cs.concretize.end()) r.concretization[left] = it->second;
    }
}

}  // namespace lcabs
