// qnetctl: structural controllability analysis and single-driver
// augmentation planning for directed networks.
//
// Exit codes: 0 controllable / success, 1 negative verdict (or disconnected
// input for `plan`), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnet/graph.hpp"
#include "qnet/kalman.hpp"
#include "qnet/lin.hpp"
#include "qnet/matching.hpp"
#include "qnet/network_io.hpp"
#include "qnet/planner.hpp"
#include "qnet/report.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

qnet::QDigraph load(const std::string& path) { return qnet::parse_network(qnet::read_file(path)); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qnet::ParseError(0, "cannot write \"" + path + "\"");
    out << text;
}

json report_json(const qnet::AnalysisReport& r) {
    return json{{"n", r.n},
                {"n_u", r.n_u},
                {"m", r.m},
                {"n_d", r.n_d},
                {"unmatched", r.unmatched},
                {"inaccessible", r.inaccessible},
                {"dilation_s", r.dilation_s},
                {"dilation_t", r.dilation_t},
                {"controllable", r.controllable},
                {"cacti", r.cacti},
                {"stems", r.stems},
                {"buds", r.buds}};
}

json plan_json(const qnet::AugmentationPlan& p, std::size_t post_n_d) {
    json edges = json::array();
    for (const auto& e : p.added_edges)
        edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"reason", std::string(qnet::to_string(e.reason))}});
    return json{{"root", p.root},
                {"attachment", p.attachment},
                {"added_edges", edges},
                {"added_edge_count", p.added_edges.size()},
                {"n", p.n},
                {"locc_cost_bound", p.locc_cost_bound()},
                {"post_plan_n_d", post_n_d}};
}

int cmd_analyze(const std::string& path, bool as_json) {
    const auto g = load(path);
    const auto r = qnet::analyze(g);
    if (as_json)
        std::cout << report_json(r).dump() << '\n';
    else
        std::cout << qnet::to_text(r);
    return r.controllable ? kOk : kNegative;
}

int cmd_plan(const std::string& path, const std::string& out_path, const std::string& plan_path, bool as_json) {
    const auto g = load(path);
    qnet::AugmentationPlan plan;
    try {
        plan = qnet::plan_augmentation(g);
    } catch (const qnet::DisconnectedNetworkError& e) {
        std::cerr << "qnetctl: " << e.what() << '\n';
        return kNegative;
    }
    const auto augmented = qnet::apply_plan(g, plan);
    const auto post_n_d = qnet::minimum_drivers(augmented).n_d;
    const auto text = qnet::plan_to_text(plan);

    if (!out_path.empty()) write_file(out_path, qnet::to_text(augmented));
    if (!plan_path.empty()) write_file(plan_path, text);

    if (as_json) {
        std::cout << plan_json(plan, post_n_d).dump() << '\n';
    } else {
        std::cout << text;
        std::cout << "# added_edges: " << plan.added_edges.size() << '\n';
        std::cout << "# locc_cost_bound: " << plan.locc_cost_bound() << '\n';
        std::cout << "# post_plan_n_d: " << post_n_d << '\n';
    }
    return kOk;
}

int cmd_apply(const std::string& path, const std::string& plan_path, const std::string& out_path) {
    const auto g = load(path);
    const auto plan = qnet::parse_plan(qnet::read_file(plan_path));
    const auto text = qnet::to_text(qnet::apply_plan(g, plan));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kOk;
}

int cmd_verify(const std::string& path, std::size_t trials, std::uint64_t seed, bool as_json) {
    const auto g = load(path);
    const auto cert = qnet::generic_rank_check(g, std::nullopt, {trials, seed});
    if (as_json) {
        std::cout << json{{"achieved_rank", cert.achieved_rank},
                          {"n", cert.n},
                          {"full_rank", cert.full_rank},
                          {"trials", cert.trials},
                          {"seed", cert.seed},
                          {"field_prime", cert.field_prime}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "rank: " << cert.achieved_rank << '/' << cert.n << '\n';
        std::cout << "full_rank: " << (cert.full_rank ? "true" : "false") << '\n';
        std::cout << "trials: " << cert.trials << '\n';
        std::cout << "seed: " << cert.seed << '\n';
        std::cout << "field_prime: " << cert.field_prime << '\n';
    }
    return cert.full_rank ? kOk : kNegative;
}

int cmd_export_dot(const std::string& path) {
    std::cout << qnet::to_dot(load(path));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural controllability analysis and single-driver augmentation planning"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a single JSON object instead of text");

    std::string input;
    std::string out_path;
    std::string plan_path;
    std::size_t trials = 3;
    std::uint64_t seed = 42;

    auto* analyze = app.add_subcommand("analyze", "Minimum drivers and Lin's criterion for the declared drivers");
    analyze->add_option("file", input, "Network file")->required();

    auto* plan = app.add_subcommand("plan", "Plan entanglement edges for single-driver control");
    plan->add_option("file", input, "Network file")->required();
    plan->add_option("-o,--out", out_path, "Write the augmented network here");
    plan->add_option("--plan-out", plan_path, "Write the plan here");

    auto* apply = app.add_subcommand("apply", "Apply a stored plan to a network");
    apply->add_option("file", input, "Network file")->required();
    apply->add_option("plan", plan_path, "Plan file")->required();
    apply->add_option("-o,--out", out_path, "Write the augmented network here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Generic Kalman rank check over Z_p");
    verify->add_option("file", input, "Network file")->required();
    verify->add_option("--trials", trials, "Random instantiations")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed");

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a network");
    dot->add_option("file", input, "Network file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(input, as_json);
        if (*plan) return cmd_plan(input, out_path, plan_path, as_json);
        if (*apply) return cmd_apply(input, plan_path, out_path);
        if (*verify) return cmd_verify(input, trials, seed, as_json);
        if (*dot) return cmd_export_dot(input);
    } catch (const qnet::NetworkError& e) {
        std::cerr << "qnetctl: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "qnetctl: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
