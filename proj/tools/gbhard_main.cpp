// gbhard: instance compilers from classical decision problems into Game Boy
// game-level models, rule-level solvers, brute-force oracles, and seeded
// equivalence campaigns.
//
// Exit status is part of the interface: 0 = yes/solvable/agreement,
// 1 = no/unsolvable/disagreement, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbhard/levels.hpp"
#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"
#include "gbhard/simulators.hpp"
#include "gbhard/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << text;
}

int run_reduce(const std::string& from, const std::string& input_path,
               const std::string& output_path, bool with_stats) {
    const std::string text = read_input(input_path);
    gbhard::ReductionStats stats;
    std::string out;
    if (from == "3cnf") {
        out = gbhard::serialize(gbhard::reduce_3cnf_to_dk(gbhard::parse_dimacs(text), &stats));
    } else if (from == "hamcycle") {
        out = gbhard::serialize(
            gbhard::reduce_hamcycle_to_wario(gbhard::parse_graph(text), &stats));
    } else if (from == "knapsack") {
        out = gbhard::serialize(
            gbhard::reduce_knapsack_to_harvest(gbhard::parse_knapsack(text), &stats));
    } else {
        out = gbhard::serialize(
            gbhard::reduce_push1_to_mole(gbhard::parse_push1(text), &stats));
    }
    write_output(output_path, out);
    if (with_stats)
        std::cerr << "{\"source_size\": " << stats.source_size
                  << ", \"output_cells_or_rooms\": " << stats.output_cells_or_rooms
                  << ", \"wall_clock_ns\": " << stats.wall_clock.count() << "}\n";
    return 0;
}

int run_solve(const std::string& input_path, bool with_witness) {
    const gbhard::Level level = gbhard::deserialize(read_input(input_path));
    const gbhard::Decision decision = gbhard::solve(level);
    if (decision.solvable) {
        std::cout << "SOLVABLE\n";
        if (with_witness && decision.witness) {
            std::string line;
            for (const std::string& action : *decision.witness) {
                if (!line.empty()) line += ' ';
                line += action;
            }
            std::cout << line << '\n';
        }
        return 0;
    }
    std::cout << "UNSOLVABLE\n";
    return 1;
}

int run_oracle(const std::string& problem, const std::string& input_path) {
    const std::string text = read_input(input_path);
    bool yes = false;
    if (problem == "sat") {
        yes = gbhard::sat_oracle(gbhard::parse_dimacs(text));
    } else if (problem == "hamcycle") {
        yes = gbhard::ham_cycle_oracle(gbhard::parse_graph(text));
    } else if (problem == "knapsack") {
        yes = gbhard::knapsack_oracle(gbhard::parse_knapsack(text));
    } else {
        yes = gbhard::push1_oracle(gbhard::parse_push1(text));
    }
    std::cout << (yes ? "YES\n" : "NO\n");
    return yes ? 0 : 1;
}

int run_verify(const gbhard::CampaignSpec& spec) {
    const gbhard::CampaignReport report = gbhard::run_campaign(spec);
    std::cout << gbhard::report_to_json(report);
    std::cerr << gbhard::report_to_table(report);
    if (!report.error_list.empty()) return 2;
    return report.disagreements == 0 ? 0 : 1;
}

int run_render(const std::string& input_path) {
    const gbhard::Level level = gbhard::deserialize(read_input(input_path));
    std::cout << gbhard::render_ascii(level);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"instance compilers, solvers, and oracles for four Game Boy game models"};
    app.require_subcommand(1);

    std::string from, problem, pair_name;
    std::string input_path = "-";
    std::string output_path = "-";
    bool with_stats = false, with_witness = false;
    gbhard::CampaignSpec spec;
    spec.count = 100;

    CLI::App* reduce = app.add_subcommand("reduce", "compile a source instance into a level");
    reduce->add_option("--from", from, "source problem")
        ->required()
        ->check(CLI::IsMember({"3cnf", "hamcycle", "knapsack", "push1"}));
    reduce->add_option("-i,--input", input_path, "input file or - for stdin")->required();
    reduce->add_option("-o,--output", output_path, "output file or - for stdout");
    reduce->add_flag("--stats", with_stats, "emit reduction stats to stderr");

    CLI::App* solve = app.add_subcommand("solve", "decide a level file");
    solve->add_option("-i,--input", input_path, "level file or - for stdin")->required();
    solve->add_flag("--witness", with_witness, "print the winning action sequence");

    CLI::App* oracle = app.add_subcommand("oracle", "decide a source instance by brute force");
    oracle->add_option("--problem", problem, "source problem")
        ->required()
        ->check(CLI::IsMember({"sat", "hamcycle", "knapsack", "push1"}));
    oracle->add_option("-i,--input", input_path, "input file or - for stdin")->required();

    CLI::App* verify = app.add_subcommand("verify", "run an oracle-vs-solver campaign");
    verify->add_option("--pair", pair_name, "reduction pair")
        ->required()
        ->check(CLI::IsMember({"cnf-dk", "ham-wario", "knap-harvest", "push1-mole"}));
    verify->add_option("--count", spec.count, "number of instances");
    verify->add_option("--seed", spec.seed, "campaign seed");
    verify->add_option("--max-vars", spec.sizes.max_vars, "cnf-dk: variables per formula");
    verify->add_option("--max-clauses", spec.sizes.max_clauses, "cnf-dk: clauses per formula");
    verify->add_option("--max-vertices", spec.sizes.max_vertices,
                       "ham-wario: vertices per graph (drawn as degree pairs)");
    verify->add_option("--max-capacity", spec.sizes.knapsack.max_capacity,
                       "knap-harvest: knapsack capacity");
    verify->add_option("--max-items", spec.sizes.knapsack.max_items,
                       "knap-harvest: item kinds");
    verify->add_option("--max-weight", spec.sizes.knapsack.max_weight,
                       "knap-harvest: item weight");
    verify->add_option("--max-value", spec.sizes.knapsack.max_value,
                       "knap-harvest: item value");
    verify->add_option("--max-grid", spec.sizes.push1.max_grid, "push1-mole: grid side");
    verify->add_option("--max-blocks", spec.sizes.push1.max_blocks, "push1-mole: blocks");

    CLI::App* render = app.add_subcommand("render", "draw a level file as ASCII");
    render->add_option("-i,--input", input_path, "level file or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (reduce->parsed()) return run_reduce(from, input_path, output_path, with_stats);
        if (solve->parsed()) return run_solve(input_path, with_witness);
        if (oracle->parsed()) return run_oracle(problem, input_path);
        if (verify->parsed()) {
            spec.pair = gbhard::parse_campaign_pair(pair_name);
            return run_verify(spec);
        }
        if (render->parsed()) return run_render(input_path);
    } catch (const std::exception& e) {
        std::cerr << "gbhard: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
