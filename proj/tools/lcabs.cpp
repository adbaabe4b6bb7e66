/*
 * lcabs - command line front-end.
 *
 * Subcommands construct window sets, l-complete approximations, reach sets
 * and canonical relations from machine or quantizer JSON files, and verify
 * simulation relations. Exit codes: 0 completed (verdict outcomes do not
 * change it), 2 input or validation error, 3 internal inconsistency.
 */

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "lcabs/json_io.hpp"

namespace {

using namespace lcabs;

std::size_t node_budget() {
    if (const char* env = std::getenv("LCABS_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultNodeBudget;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

struct Input {
    Fsm fsm;                             // trimmed
    std::optional<CompiledSystem> compiled;  // set for quantizer inputs
};

// A system file is either a machine or a quantizer spec; quantizer specs are
// compiled first. --mode overrides the mode stored in the file.
Input load_system(const std::string& path, const std::string& mode_flag) {
    json j = load_json(path);
    if (is_quantizer_json(j)) {
        QuantizerSpec spec = quantizer_from_json(j);
        if (mode_flag == "point") spec.mode = TimeScaleMode::point;
        if (mode_flag == "set") spec.mode = TimeScaleMode::set;
        CompiledSystem cs = compile(spec);
        return Input{cs.fsm, std::move(cs)};
    }
    return Input{trim(fsm_from_json(j)), std::nullopt};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongest asynchronous l-complete approximation toolkit"};
    app.require_subcommand(1);

    std::string input_path, out_path, dot_path, mode_flag, past_token;
    std::string relation_path, flavor_name = "l-initial";
    std::size_t l = 0, oracle_horizon = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_l) {
        cmd->add_option("input", input_path, "machine or quantizer JSON file")
            ->required();
        cmd->add_option("--mode", mode_flag, "quantizer time-scale mode")
            ->check(CLI::IsMember({"point", "set"}));
        cmd->add_option("-o,--output", out_path, "write JSON here instead of stdout");
        if (needs_l) cmd->add_option("--l", l, "window length parameter")->required();
    };

    auto* cmd_windows = app.add_subcommand("windows", "extract behavior windows");
    add_common(cmd_windows, true);
    cmd_windows->add_option("--oracle-horizon", oracle_horizon,
                            "recompute via the brute-force path oracle");

    auto* cmd_approx =
        app.add_subcommand("approximate", "build the l-complete approximation");
    add_common(cmd_approx, true);
    cmd_approx->add_option("--dot", dot_path, "also write a DOT graph");

    auto* cmd_lc = app.add_subcommand("check-lcomplete", "decide l-completeness");
    add_common(cmd_lc, true);

    auto* cmd_reach = app.add_subcommand("reach", "recent-past reach set");
    add_common(cmd_reach, false);
    cmd_reach->add_option("--past", past_token, "recent past, space-joined (\"^\" = empty)")
        ->required();

    auto* cmd_rel = app.add_subcommand("relations", "emit R0, Rl and RX");
    add_common(cmd_rel, true);

    auto* cmd_sim = app.add_subcommand("check-sim", "verify a simulation relation");
    cmd_sim->add_option("sys1", input_path, "left system JSON")->required();
    std::string sys2_path;
    cmd_sim->add_option("sys2", sys2_path, "right system JSON")->required();
    cmd_sim->add_option("--relation", relation_path, "relation JSON")->required();
    cmd_sim->add_option("--flavor", flavor_name,
                        "l-initial | 0-initial | async | esync | sync");
    cmd_sim->add_option("--l", l, "l for the l-initial flavor");
    cmd_sim->add_option("--mode", mode_flag, "quantizer time-scale mode")
        ->check(CLI::IsMember({"point", "set"}));
    cmd_sim->add_option("-o,--output", out_path, "write JSON here instead of stdout");

    auto* cmd_report = app.add_subcommand("report", "full simulation verdict report");
    add_common(cmd_report, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_windows->parsed()) {
            Input in = load_system(input_path, mode_flag);
            WindowSet ws = oracle_horizon > 0
                               ? windows_oracle(in.fsm, l, oracle_horizon, node_budget())
                               : extract_windows(in.fsm, l);
            emit(windowset_to_json(ws), out_path);
        } else if (cmd_approx->parsed()) {
            Input in = load_system(input_path, mode_flag);
            ApproxMachine am = approximate(extract_windows(in.fsm, l));
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path);
                if (!dot) throw ParseError("cannot write " + dot_path);
                dot << to_dot(am.fsm);
            }
            emit(approx_to_json(am), out_path);
        } else if (cmd_lc->parsed()) {
            Input in = load_system(input_path, mode_flag);
            LcVerdict v = is_l_complete(in.fsm, l);
            json j;
            j["l"] = l;
            j["status"] = v.pass ? "pass" : "fail";
            if (v.witness) j["witness"] = word_token(*v.witness);
            emit(j, out_path);
        } else if (cmd_reach->parsed()) {
            Input in = load_system(input_path, mode_flag);
            Word zeta = parse_word_token(past_token);
            std::set<State> states = recent_past_states(in.fsm, zeta);
            json j;
            j["past"] = word_token(zeta);
            std::vector<std::string> ids(states.begin(), states.end());
            j["states"] = ids;
            if (in.compiled) {
                IntervalSet set = reach_past(*in.compiled, zeta);
                j["concretization"] = intervalset_to_json(set);
                j["concretization_text"] = set.to_string();
            }
            emit(j, out_path);
        } else if (cmd_rel->parsed()) {
            Input in = load_system(input_path, mode_flag);
            ApproxMachine am = approximate(extract_windows(in.fsm, l));
            Relation r0 = build_R0(in.fsm, am);
            Relation rl = build_Rl(in.fsm, am);
            Relation rx = build_RX(in.fsm, l);
            if (in.compiled) {
                attach_concretization(r0, *in.compiled);
                attach_concretization(rl, *in.compiled);
                attach_concretization(rx, *in.compiled);
            }
            json j;
            j["l"] = l;
            j["R0"] = relation_to_json(r0);
            j["Rl"] = relation_to_json(rl);
            j["RX"] = relation_to_json(rx);
            emit(j, out_path);
        } else if (cmd_sim->parsed()) {
            Input in1 = load_system(input_path, mode_flag);
            Input in2 = load_system(sys2_path, mode_flag);
            Relation r = relation_from_json(load_json(relation_path));
            SimFlavor flavor = parse_flavor(flavor_name, l);
            Verdict v = check_relation(r, in1.fsm, in2.fsm, flavor);
            json j = verdict_to_json(v);
            j["flavor"] = flavor.name();
            emit(j, out_path);
        } else if (cmd_report->parsed()) {
            Input in = load_system(input_path, mode_flag);
            Theorem1Report rep = theorem1_report(in.fsm, l);
            emit(report_to_json(rep), out_path);
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "lcabs: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "lcabs: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lcabs: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
