#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fsmsynth/encoding.hpp"
#include "fsmsynth/genome.hpp"
#include "fsmsynth/mealy.hpp"
#include "fsmsynth/rng.hpp"
#include "fsmsynth/task.hpp"

namespace fsmsynth {

enum class CrossoverKind { OnePoint, TwoPoint };

struct Weights {
    double w1 = 1.0;   // reachable-state count
    double w2 = 0.01;  // task iterations
};

struct GaConfig {
    uint32_t population_size = 1200;
    uint32_t max_generations = 20000;
    double crossover_probability = 0.4;
    double mutation_probability = 0.25;
    CrossoverKind crossover_kind = CrossoverKind::TwoPoint;
    Weights weights;
    double infeasibility_penalty = 1000.0;  // per unmet goal unit
    uint64_t seed = 1;
    // When set, only a feasible solution with a1 <= target_states stops the
    // run early; unset, any feasible solution does.
    std::optional<uint32_t> target_states;
};

// Scalarized objective plus the raw measures it was computed from.
// F = w1*a1 + w2*a2, extended with penalty*deficit when the task was not
// solved and with 1e-6*final_distance as the helicopter tie-break.
struct Fitness {
    bool feasible = false;
    uint32_t a1 = 0;  // reachable states of the phenotype
    uint32_t a2 = 0;  // task iterations consumed
    double raw = 0.0;
    double final_distance = 0.0;
    double f = 0.0;
};

struct Individual {
    Genome genome;
    Fitness fitness;
    uint64_t birth = 0;  // insertion order; on equal F the older survives
};

using Population = std::vector<Individual>;

struct GenStats {
    uint32_t generation = 0;
    double best_f = 0.0;
    double mean_f = 0.0;
    uint32_t best_a1 = 0;
    uint32_t best_a2 = 0;
    double best_raw = 0.0;
};

struct SynthesisResult {
    Genome best_genome;
    MealyMachine best_machine;
    Fitness best_fitness;
    uint32_t generations_run = 0;
    uint64_t evaluations = 0;
    std::vector<GenStats> stats;  // one row per generation, generation 0 first
};

inline constexpr double kDistanceTiebreakWeight = 1e-6;

double objective(double a1, double a2, const Weights& weights);

// Decodes, simulates, scores. Pure; genome must be corrected.
Fitness evaluate(const Genome& genome, const EncodingSpec& spec, const Task& task,
                 const GaConfig& config);

// Uniform random bits passed through correct(). One rng draw per bit.
Genome random_genome(const EncodingSpec& spec, Rng& rng);

// population_size corrected, evaluated genomes with birth order 0..n-1.
Population init_population(const EncodingSpec& spec, const Task& task,
                           const GaConfig& config, Rng& rng);

// Redraws one field of one gene. Draw order: gene index, branch bit
// (1 = output field), replacement value. The result stays corrected.
Genome mutate(const Genome& genome, const EncodingSpec& spec, Rng& rng);

// Deterministic core of mutate, exposed for tests that pin the randomness.
Genome mutate_fields(const Genome& genome, const EncodingSpec& spec, uint32_t gene,
                     bool output_branch, uint32_t value);

// Cut points drawn uniformly from [1, genome_bits-1]; two-point redraws
// until the points differ, then swaps the middle segment. Children are
// corrected before return.
std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b,
                                    const EncodingSpec& spec, CrossoverKind kind,
                                    Rng& rng);

// Deterministic cores, pre-correction semantics per the cut definitions.
std::pair<Genome, Genome> crossover_one_point(const Genome& a, const Genome& b,
                                              size_t cut);
std::pair<Genome, Genome> crossover_two_point(const Genome& a, const Genome& b,
                                              size_t i, size_t j);

// Sorts by (F, birth) ascending and removes the 3 individuals with highest
// F (newest first among ties). Requires population_size + 3 members.
void select_replace(Population& population, uint32_t population_size);

using GenerationObserver = std::function<void(const Population&, const GenStats&)>;

// The steady-state loop: init + evaluate; per generation draw, in order,
// two crossover parents (2-way tournaments, two index draws each), the
// crossover gate, cut points, one mutation parent, the mutation gate, the
// mutation fields; insert the 3 corrected, evaluated newcomers; replace.
// Stops on a feasible solution meeting target_states or at max_generations.
SynthesisResult run(const EncodingSpec& spec, const Task& task, const GaConfig& config,
                    const GenerationObserver& observer = {});

}  // namespace fsmsynth
