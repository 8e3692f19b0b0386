#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "gbhard/problems.hpp"
#include "gbhard/reductions.hpp"

namespace gbhard {

// SplitMix64 (Steele, Lea, Flood 2014). The exact constants are part of the
// campaign format: any implementation with this state update reproduces our
// streams bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n); campaigns only need determinism, not
    // perfect uniformity, so plain reduction is fine and easy to reproduce.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

//// Instance generators //////////////////////////////////////////////////////

// m clauses of exactly 3 uniformly drawn literals over n >= 1 variables.
CnfFormula gen_random_3cnf(std::uint64_t seed, int n, int m);

// Valid skull-door graph with `pairs` (1-in,2-out) vertices and `pairs`
// (2-in,1-out) vertices, built by matching out-stubs to shuffled in-stubs and
// reshuffling on self-loops. Not guaranteed planar.
DirectedGraph gen_random_skull_graph(std::uint64_t seed, int pairs);

struct KnapsackGenBounds {
    long long max_capacity = 30;
    int max_items = 6;
    long long max_weight = 10;
    long long max_value = 20;
};

// Targets are drawn around a single-item repetition estimate so both oracle
// outcomes occur.
KnapsackInstance gen_random_knapsack(std::uint64_t seed, const KnapsackGenBounds& bounds = {});

struct Push1GenBounds {
    int max_grid = 4;
    int max_blocks = 3;
};

// Robot, win, and blocks placed without overlap; blocks never start on the
// win cell so every generated instance has a grid form.
Push1Instance gen_random_push1(std::uint64_t seed, const Push1GenBounds& bounds = {});

//// Equivalence campaigns ////////////////////////////////////////////////////

enum class CampaignPair { CnfDk, HamWario, KnapHarvest, Push1Mole };

const char* campaign_pair_name(CampaignPair pair);
CampaignPair parse_campaign_pair(const std::string& name);  // throws std::invalid_argument

// Deliberately broken post-reduction rewrites used to demonstrate that the
// harness detects unsound translations.
enum class Mutation {
    None,
    DkFlipPolarity,     // invert the first board's polarity
    WarioDropKey,       // delete the key from the first keyed room
    HarvestDayOffByOne, // shift the season length by one day
    MoleShiftWeight,    // move the first weight one cell
};

struct CampaignSizeParams {
    int max_vars = 8;        // cnf-dk
    int max_clauses = 10;    // cnf-dk
    int max_vertices = 10;   // ham-wario (drawn as 1..max_vertices/2 degree pairs)
    KnapsackGenBounds knapsack;
    Push1GenBounds push1;
};

struct CampaignSpec {
    CampaignPair pair = CampaignPair::KnapHarvest;
    int count = 0;
    std::uint64_t seed = 0;
    CampaignSizeParams sizes;
    Mutation mutation = Mutation::None;
};

std::vector<std::string> validate_campaign_spec(const CampaignSpec& spec);

struct Disagreement {
    int index = 0;  // instance i was generated from seed ^ i
    std::string instance_text;
    bool oracle_verdict = false;
    bool solver_verdict = false;

    bool operator==(const Disagreement&) const = default;
};

// An instance whose oracle or solver refused to run (cap exceeded). Such
// instances are reported but decide nothing: they count toward neither
// agreements nor disagreements nor total.
struct InstanceError {
    int index = 0;
    std::string instance_text;
    std::string message;

    bool operator==(const InstanceError&) const = default;
};

struct CampaignReport {
    CampaignPair pair = CampaignPair::KnapHarvest;
    int count = 0;
    std::uint64_t seed = 0;
    std::uint64_t total = 0;  // decided instances; agreements + disagreements
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t positives = 0;  // oracle-true instances
    std::vector<Disagreement> disagreement_list;
    std::vector<InstanceError> error_list;
    ReductionStats stats;  // aggregated over all reductions

    bool operator==(const CampaignReport&) const = default;
};

// For i in 0..count-1: generate instance i from seed ^ i, compare the source
// oracle with the game solver run on the reduced level, and assert the
// reduction's size/structure bounds. Deterministic in the spec.
CampaignReport run_campaign(const CampaignSpec& spec);

// Canonical JSON (excludes wall-clock time, which is not reproducible).
std::string report_to_json(const CampaignReport& report);
// Human-readable summary table, including timing.
std::string report_to_table(const CampaignReport& report);

}  // namespace gbhard
