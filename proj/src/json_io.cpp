#include "lcabs/json_io.hpp"

#include <algorithm>

namespace lcabs {

namespace {

template <typename C>
json sorted_array(const C& c) {
    std::vector<std::string> v(c.begin(), c.end());
    std::sort(v.begin(), v.end());
    return json(v);
}

}  // namespace

json fsm_to_json(const Fsm& m) {
    json j;
    j["alphabet"] = sorted_array(m.alphabet);
    j["states"] = sorted_array(m.states);
    j["initial"] = sorted_array(m.initial);
    json trans = json::array();
    for (const auto& t : m.transitions)
        trans.push_back(json::array({t.src, t.symbol, t.dst}));
    j["transitions"] = trans;
    return j;
}

Fsm fsm_from_json(const json& j) {
    try {
        Fsm m;
        for (const auto& a : j.at("alphabet")) m.alphabet.insert(a.get<std::string>());
        for (const auto& s : j.at("states")) m.states.insert(s.get<std::string>());
        for (const auto& s : j.at("initial")) m.initial.insert(s.get<std::string>());
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError("transition must be [src, symbol, dst]");
            m.transitions.insert(
                {t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
        }
        m.check_well_formed();
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("machine: ") + e.what());
    }
}

json approx_to_json(const ApproxMachine& am) {
    json j = fsm_to_json(am.fsm);
    j["l"] = am.l;
    return j;
}

json windowset_to_json(const WindowSet& ws) {
    json j;
    j["l"] = ws.l;
    j["alphabet"] = sorted_array(ws.alphabet);
    std::vector<std::string> init, rec;
    for (const auto& w : ws.initial) init.push_back(word_token(w));
    for (const auto& w : ws.recurring) rec.push_back(word_token(w));
    std::sort(init.begin(), init.end());
    std::sort(rec.begin(), rec.end());
    j["initial"] = init;
    j["recurring"] = rec;
    return j;
}

WindowSet windowset_from_json(const json& j) {
    try {
        WindowSet ws;
        ws.l = j.at("l").get<std::size_t>();
        if (j.contains("alphabet"))
            for (const auto& a : j.at("alphabet")) ws.alphabet.insert(a.get<std::string>());
        for (const auto& t : j.at("initial"))
            ws.initial.insert(parse_word_token(t.get<std::string>()));
        for (const auto& t : j.at("recurring"))
            ws.recurring.insert(parse_word_token(t.get<std::string>()));
        return ws;
    } catch (const json::exception& e) {
        throw ParseError(std::string("window set: ") + e.what());
    }
}

json rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return json(r.numerator());
    return json(rational_token(r));
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2)
        return Rational(j[0].get<long long>(), j[1].get<long long>());
    throw ParseError("rational must be an integer, a string, or [num, den]");
}

json interval_to_json(const Interval& iv) {
    json j;
    j["lo"] = rational_to_json(iv.lo);
    j["hi"] = rational_to_json(iv.hi);
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    return j;
}

Interval interval_from_json(const json& j) {
    try {
        Interval iv;
        iv.lo = rational_from_json(j.at("lo"));
        iv.hi = rational_from_json(j.at("hi"));
        iv.lo_closed = j.at("lo_closed").get<bool>();
        iv.hi_closed = j.at("hi_closed").get<bool>();
        if (!iv.valid()) throw ParseError("invalid interval " + iv.to_string());
        return iv;
    } catch (const json::exception& e) {
        throw ParseError(std::string("interval: ") + e.what());
    }
}

json intervalset_to_json(const IntervalSet& s) {
    json j = json::array();
    for (const auto& iv : s.parts()) j.push_back(interval_to_json(iv));
    return j;
}

IntervalSet intervalset_from_json(const json& j) {
    std::vector<Interval> parts;
    for (const auto& e : j) parts.push_back(interval_from_json(e));
    return IntervalSet(std::move(parts));
}

json quantizer_to_json(const QuantizerSpec& spec) {
    json j;
    j["domain"] = interval_to_json(spec.domain);
    json syms;
    for (const auto& [g, iv] : spec.symbols) syms[g] = interval_to_json(iv);
    j["symbols"] = syms;
    json init = json::array();
    for (const auto& v : spec.initial_values) init.push_back(rational_to_json(v));
    j["initial_values"] = init;
    j["mode"] = spec.mode == TimeScaleMode::point ? "point" : "set";
    return j;
}

QuantizerSpec quantizer_from_json(const json& j) {
    try {
        QuantizerSpec spec;
        spec.domain = interval_from_json(j.at("domain"));
        for (const auto& [g, iv] : j.at("symbols").items()) {
            if (g.empty() || g.find_first_of(" \t\n") != std::string::npos)
                throw ParseError("symbol token must be nonempty without whitespace");
            spec.symbols[g] = interval_from_json(iv);
        }
        for (const auto& v : j.at("initial_values"))
            spec.initial_values.push_back(rational_from_json(v));
        std::string mode = j.value("mode", "point");
        if (mode == "point")
            spec.mode = TimeScaleMode::point;
        else if (mode == "set")
            spec.mode = TimeScaleMode::set;
        else
            throw ParseError("mode must be \"point\" or \"set\"");
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("quantizer spec: ") + e.what());
    }
}

json relation_to_json(const Relation& r) {
    json j;
    j["flavor"] = r.flavor;
    j["l"] = r.l;
    json pairs = json::array();
    for (const auto& [a, b] : r.pairs) pairs.push_back(json::array({a, b}));
    j["pairs"] = pairs;
    if (!r.concretization.empty()) {
        json conc;
        for (const auto& [s, set] : r.concretization) conc[s] = intervalset_to_json(set);
        j["concretization"] = conc;
    }
    return j;
}

Relation relation_from_json(const json& j) {
    try {
        Relation r;
        r.flavor = j.value("flavor", "custom");
        r.l = j.value("l", 0);
        for (const auto& p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 2)
                throw ParseError("relation pair must be [left, right]");
            r.pairs.insert({p[0].get<std::string>(), p[1].get<std::string>()});
        }
        if (j.contains("concretization"))
            for (const auto& [s, set] : j.at("concretization").items())
                r.concretization[s] = intervalset_from_json(set);
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("relation: ") + e.what());
    }
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["status"] = v.pass ? "pass" : "fail";
    if (v.pass) {
        j["certificate"] = relation_to_json(v.certificate);
    } else if (v.counterexample) {
        const auto& c = *v.counterexample;
        json cx;
        cx["left"] = c.left;
        cx["right"] = c.right;
        cx["symbol"] = c.symbol;
        cx["replay"] = word_token(c.replay);
        cx["reason"] = c.reason;
        j["counterexample"] = cx;
    }
    return j;
}

json report_to_json(const Theorem1Report& rep) {
    json j;
    j["l"] = rep.l;
    json premises;
    premises["l_complete"] = rep.l_complete.pass;
    if (rep.l_complete.witness)
        premises["l_complete_witness"] = word_token(*rep.l_complete.witness);
    premises["rx_simulation"] = verdict_to_json(rep.rx_verdict);
    premises["rl_inverse"] = verdict_to_json(rep.rl_inverse_verdict);
    j["premises"] = premises;
    json items = json::array();
    for (const auto& item : rep.items) {
        json e = verdict_to_json(item.verdict);
        e["item"] = item.id;
        e["flavor"] = item.flavor;
        e.erase("certificate");  // relations are reported once below
        items.push_back(e);
    }
    j["items"] = items;
    j["approximation"] = approx_to_json(rep.approx);
    j["R0"] = relation_to_json(rep.r0);
    j["Rl"] = relation_to_json(rep.rl);
    j["RX"] = relation_to_json(rep.rx);
    return j;
}

bool is_quantizer_json(const json& j) {
    return j.is_object() && j.contains("domain") && j.contains("symbols");
}

}  // namespace lcabs
