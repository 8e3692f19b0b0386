#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gbhard/levels.hpp"
#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"
#include "gbhard/simulators.hpp"
#include "gbhard/verify.hpp"

namespace py = pybind11;

namespace {

// The python surface works on the same text formats as the CLI: problem
// instances go in as text, levels travel as canonical JSON, verdicts come
// back as small dicts.

py::dict decision_to_dict(const gbhard::Decision& d) {
    py::dict out;
    out["solvable"] = d.solvable;
    out["states_explored"] = d.states_explored;
    if (d.witness) {
        out["witness"] = *d.witness;
    } else {
        out["witness"] = py::none();
    }
    return out;
}

std::string reduce_text(const std::string& from, const std::string& text) {
    if (from == "3cnf")
        return gbhard::serialize(gbhard::reduce_3cnf_to_dk(gbhard::parse_dimacs(text)));
    if (from == "hamcycle")
        return gbhard::serialize(gbhard::reduce_hamcycle_to_wario(gbhard::parse_graph(text)));
    if (from == "knapsack")
        return gbhard::serialize(
            gbhard::reduce_knapsack_to_harvest(gbhard::parse_knapsack(text)));
    if (from == "push1")
        return gbhard::serialize(gbhard::reduce_push1_to_mole(gbhard::parse_push1(text)));
    throw std::invalid_argument("unknown source problem '" + from +
                                "' (expected 3cnf, hamcycle, knapsack, or push1)");
}

bool oracle_text(const std::string& problem, const std::string& text) {
    if (problem == "sat") return gbhard::sat_oracle(gbhard::parse_dimacs(text));
    if (problem == "hamcycle") return gbhard::ham_cycle_oracle(gbhard::parse_graph(text));
    if (problem == "knapsack") return gbhard::knapsack_oracle(gbhard::parse_knapsack(text));
    if (problem == "push1") return gbhard::push1_oracle(gbhard::parse_push1(text));
    throw std::invalid_argument("unknown problem '" + problem +
                                "' (expected sat, hamcycle, knapsack, or push1)");
}

py::dict solve_text(const std::string& level_json) {
    const gbhard::Level level = gbhard::deserialize(level_json);
    py::dict out = decision_to_dict(gbhard::solve(level));
    out["game"] = gbhard::game_name(level);
    return out;
}

bool replay_text(const std::string& level_json, const std::vector<std::string>& actions) {
    return gbhard::replay(gbhard::deserialize(level_json), actions);
}

std::string render_text(const std::string& level_json) {
    return gbhard::render_ascii(gbhard::deserialize(level_json));
}

std::vector<std::string> validate_text(const std::string& level_json) {
    return gbhard::validate(gbhard::deserialize(level_json));
}

py::dict verify_pair(const std::string& pair, int count, std::uint64_t seed) {
    gbhard::CampaignSpec spec;
    spec.pair = gbhard::parse_campaign_pair(pair);
    spec.count = count;
    spec.seed = seed;
    const gbhard::CampaignReport report = gbhard::run_campaign(spec);
    py::dict out;
    out["pair"] = gbhard::campaign_pair_name(report.pair);
    out["total"] = report.total;
    out["agreements"] = report.agreements;
    out["disagreements"] = report.disagreements;
    out["positives"] = report.positives;
    out["errors"] = report.error_list.size();
    out["json"] = gbhard::report_to_json(report);
    return out;
}

}  // namespace

PYBIND11_MODULE(_gbhard, m) {
    m.doc() = "instance compilers, solvers, and oracles for four Game Boy game models";

    m.def("oracle", &oracle_text, py::arg("problem"), py::arg("text"),
          "Decide a source instance (sat, hamcycle, knapsack, push1) by brute force.");
    m.def("reduce", &reduce_text, py::arg("source"), py::arg("text"),
          "Compile a source instance into canonical level JSON.");
    m.def("solve", &solve_text, py::arg("level_json"),
          "Decide a level; returns {game, solvable, states_explored, witness}.");
    m.def("replay", &replay_text, py::arg("level_json"), py::arg("actions"),
          "Replay a witness action sequence; True when it ends in a win.");
    m.def("render", &render_text, py::arg("level_json"),
          "ASCII diagram of a level.");
    m.def("validate", &validate_text, py::arg("level_json"),
          "List of invariant violations; empty when the level is valid.");
    m.def("verify", &verify_pair, py::arg("pair"), py::arg("count"), py::arg("seed"),
          "Run an oracle-vs-solver campaign (cnf-dk, ham-wario, knap-harvest, push1-mole).");

    py::register_exception<gbhard::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<gbhard::SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<gbhard::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
}
