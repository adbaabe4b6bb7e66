#include "lcabs/quantizer.hpp"

#include <algorithm>

namespace lcabs {

namespace {

// Exit endpoints of a symbol interval within the domain. An endpoint is an
// exit if the interval is open on that side, or if it is closed but lies
// strictly inside the domain (the signal can cross it).
std::vector<Rational> exit_endpoints(const Interval& domain, const Interval& iv) {
    std::vector<Rational> out;
    if (!iv.lo_closed || iv.lo > domain.lo) out.push_back(iv.lo);
    if (!iv.hi_closed || iv.hi < domain.hi) out.push_back(iv.hi);
    // a point interval contributes its value once
    if (out.size() == 2 && out[0] == out[1]) out.pop_back();
    return out;
}

std::set<Symbol> symbols_at(const QuantizerSpec& spec, const Rational& v) {
    std::set<Symbol> out;
    for (const auto& [g, iv] : spec.symbols)
        if (iv.contains(v)) out.insert(g);
    return out;
}

}  // namespace

std::vector<std::string> validate(const QuantizerSpec& spec) {
    std::vector<std::string> diags;
    for (const auto& [g, iv] : spec.symbols) {
        if (!iv.valid()) {
            diags.push_back("symbol " + g + ": invalid interval " + iv.to_string());
            continue;
        }
        if (iv.lo < spec.domain.lo || iv.hi > spec.domain.hi ||
            (iv.lo == spec.domain.lo && iv.lo_closed && !spec.domain.lo_closed) ||
            (iv.hi == spec.domain.hi && iv.hi_closed && !spec.domain.hi_closed)) {
            diags.push_back("symbol " + g + ": interval " + iv.to_string() +
                            " not contained in domain " + spec.domain.to_string());
            continue;
        }
        auto exits = exit_endpoints(spec.domain, iv);
        if (exits.empty()) {
            diags.push_back("symbol " + g +
                            ": no exit endpoints: external behavior has no events");
            continue;
        }
        for (const auto& e : exits) {
            bool covered = false;
            for (const auto& [g2, iv2] : spec.symbols)
                if (g2 != g && iv2.contains(e)) covered = true;
            if (!covered)
                diags.push_back("symbol " + g + ": exit endpoint " + rational_token(e) +
                                " is not covered by any other symbol interval");
        }
    }
    for (const auto& v : spec.initial_values) {
        if (!spec.domain.contains(v))
            diags.push_back("initial value " + rational_token(v) + " outside domain");
        else if (symbols_at(spec, v).empty())
            diags.push_back("initial value " + rational_token(v) +
                            " is covered by no symbol interval");
    }
    return diags;
}

std::set<std::pair<Rational, Symbol>> exit_successors(const QuantizerSpec& spec,
                                                      const Symbol& g) {
    auto it = spec.symbols.find(g);
    if (it == spec.symbols.end()) throw UnknownSymbol(g);
    std::set<std::pair<Rational, Symbol>> out;
    for (const auto& e : exit_endpoints(spec.domain, it->second))
        for (const auto& g2 : symbols_at(spec, e)) out.insert({e, g2});
    return out;
}

CompiledSystem compile(const QuantizerSpec& spec) {
    auto diags = validate(spec);
    if (!diags.empty()) {
        std::string msg;
        for (const auto& d : diags) msg += (msg.empty() ? "" : "; ") + d;
        throw Blocking(msg);
    }

    CompiledSystem cs;
    cs.mode = spec.mode;
    Fsm& m = cs.fsm;
    for (const auto& [g, iv] : spec.symbols) m.alphabet.insert(g);

    if (spec.mode == TimeScaleMode::point) {
        // states are event values: initial values plus all exit values
        std::set<Rational> values(spec.initial_values.begin(), spec.initial_values.end());
        for (const auto& [g, iv] : spec.symbols)
            for (const auto& [e, g2] : exit_successors(spec, g)) values.insert(e);
        for (const auto& v : values) m.states.insert(rational_token(v));
        for (const auto& v : spec.initial_values) m.initial.insert(rational_token(v));
        for (const auto& v : values)
            for (const auto& g : symbols_at(spec, v))
                for (const auto& [e, g2] : exit_successors(spec, g))
                    m.transitions.insert({rational_token(v), g, rational_token(e)});
        m = trim(m);
        for (const auto& s : m.states)
            cs.concretize[s] = IntervalSet({Interval::point(parse_rational(s))});
    } else {
        for (const auto& [g, iv] : spec.symbols) m.states.insert(g);
        for (const auto& v : spec.initial_values)
            for (const auto& g : symbols_at(spec, v)) m.initial.insert(g);
        for (const auto& [g, iv] : spec.symbols)
            for (const auto& [e, g2] : exit_successors(spec, g))
                m.transitions.insert({g, g, g2});
        m = trim(m);
        for (const auto& s : m.states)
            cs.concretize[s] = IntervalSet({spec.symbols.at(s)});
    }
    return cs;
}

IntervalSet reach_past(const CompiledSystem& cs, const Word& zeta) {
    for (const auto& a : zeta)
        if (!cs.fsm.alphabet.count(a)) throw UnknownSymbol(a);
    SuccessorIndex idx(cs.fsm);
    std::set<State> layer = cs.fsm.states;  // trimmed: all states reachable
    for (const auto& a : zeta) layer = idx.post(layer, a);
    IntervalSet out;
    for (const auto& s : layer) out.insert_all(cs.concretize.at(s));
    return out;
}

}  // namespace lcabs
