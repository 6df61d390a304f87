#include "fsmsynth/evolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsmsynth {

namespace {

bool better(const Individual& a, const Individual& b) {
    if (a.fitness.f != b.fitness.f) return a.fitness.f < b.fitness.f;
    return a.birth < b.birth;
}

bool meets_goal(const Fitness& fitness, const GaConfig& config) {
    if (!fitness.feasible) return false;
    return !config.target_states || fitness.a1 <= *config.target_states;
}

GenStats make_stats(uint32_t generation, const Population& population,
                    const Individual& best) {
    GenStats stats;
    stats.generation = generation;
    stats.best_f = best.fitness.f;
    double sum = 0.0;
    for (const Individual& ind : population) sum += ind.fitness.f;
    stats.mean_f = sum / static_cast<double>(population.size());
    stats.best_a1 = best.fitness.a1;
    stats.best_a2 = best.fitness.a2;
    stats.best_raw = best.fitness.raw;
    return stats;
}

// 2-way tournament, minimizing F; ties go to the first draw.
uint32_t tournament(const Population& population, Rng& rng) {
    const uint32_t i = rng.index(static_cast<uint32_t>(population.size()));
    const uint32_t j = rng.index(static_cast<uint32_t>(population.size()));
    return population[i].fitness.f <= population[j].fitness.f ? i : j;
}

}  // namespace

double objective(double a1, double a2, const Weights& weights) {
    if (a1 < 0 || a2 < 0) {
        throw std::invalid_argument("objective: negative inputs");
    }
    return weights.w1 * a1 + weights.w2 * a2;
}

Fitness evaluate(const Genome& genome, const EncodingSpec& spec, const Task& task,
                 const GaConfig& config) {
    const MealyMachine machine = decode(genome, spec);
    const TaskEvaluation eval = task.evaluate(machine);

    Fitness fitness;
    fitness.feasible = eval.feasible;
    fitness.a1 = reachable_states(machine);
    fitness.a2 = eval.iterations;
    fitness.raw = eval.raw;
    fitness.final_distance = eval.final_distance;
    fitness.f = objective(fitness.a1, fitness.a2, config.weights) +
                kDistanceTiebreakWeight * eval.final_distance;
    if (!eval.feasible) {
        fitness.f += config.infeasibility_penalty * eval.deficit;
    }
    return fitness;
}

Genome random_genome(const EncodingSpec& spec, Rng& rng) {
    Genome genome;
    genome.bits.resize(spec.genome_bits);
    for (auto& bit : genome.bits) {
        bit = static_cast<uint8_t>(rng.bit());
    }
    return correct(genome, spec);
}

Population init_population(const EncodingSpec& spec, const Task& task,
                           const GaConfig& config, Rng& rng) {
    Population population;
    population.reserve(config.population_size);
    for (uint32_t i = 0; i < config.population_size; ++i) {
        Individual ind;
        ind.genome = random_genome(spec, rng);
        ind.fitness = evaluate(ind.genome, spec, task, config);
        ind.birth = i;
        population.push_back(std::move(ind));
    }
    return population;
}

Genome mutate_fields(const Genome& genome, const EncodingSpec& spec, uint32_t gene,
                     bool output_branch, uint32_t value) {
    Genome mutant = genome;
    if (output_branch) {
        if (value >= spec.action_count) {
            throw std::out_of_range("mutate_fields: output value out of range");
        }
        set_gene_output(mutant, spec, gene, value);
    } else {
        if (value >= spec.states) {
            throw std::out_of_range("mutate_fields: next-state value out of range");
        }
        set_gene_next_state(mutant, spec, gene, value);
    }
    return mutant;
}

Genome mutate(const Genome& genome, const EncodingSpec& spec, Rng& rng) {
    const uint32_t gene = rng.index(spec.gene_count);
    const bool output_branch = rng.bit() != 0;
    const uint32_t value =
        output_branch ? rng.index(spec.action_count) : rng.index(spec.states);
    return mutate_fields(genome, spec, gene, output_branch, value);
}

std::pair<Genome, Genome> crossover_one_point(const Genome& a, const Genome& b,
                                              size_t cut) {
    if (a.bits.size() != b.bits.size()) {
        throw std::invalid_argument("crossover: parent length mismatch");
    }
    if (cut > a.bits.size()) {
        throw std::out_of_range("crossover: cut point out of range");
    }
    Genome child1 = a;
    Genome child2 = b;
    std::copy(b.bits.begin() + cut, b.bits.end(), child1.bits.begin() + cut);
    std::copy(a.bits.begin() + cut, a.bits.end(), child2.bits.begin() + cut);
    return {std::move(child1), std::move(child2)};
}

std::pair<Genome, Genome> crossover_two_point(const Genome& a, const Genome& b,
                                              size_t i, size_t j) {
    if (a.bits.size() != b.bits.size()) {
        throw std::invalid_argument("crossover: parent length mismatch");
    }
    if (i > j || j > a.bits.size()) {
        throw std::out_of_range("crossover: cut points out of range");
    }
    Genome child1 = a;
    Genome child2 = b;
    std::copy(b.bits.begin() + i, b.bits.begin() + j, child1.bits.begin() + i);
    std::copy(a.bits.begin() + i, a.bits.begin() + j, child2.bits.begin() + i);
    return {std::move(child1), std::move(child2)};
}

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b,
                                    const EncodingSpec& spec, CrossoverKind kind,
                                    Rng& rng) {
    if (a.bits.size() != b.bits.size() || a.bits.size() != spec.genome_bits) {
        throw std::invalid_argument("crossover: parent length mismatch");
    }
    const uint32_t span = spec.genome_bits - 1;  // cut points live in [1, span]
    std::pair<Genome, Genome> children;
    if (kind == CrossoverKind::OnePoint) {
        const size_t cut = 1 + rng.index(span);
        children = crossover_one_point(a, b, cut);
    } else {
        size_t i = 1 + rng.index(span);
        size_t j = 1 + rng.index(span);
        while (i == j) {
            j = 1 + rng.index(span);
        }
        if (i > j) std::swap(i, j);
        children = crossover_two_point(a, b, i, j);
    }
    children.first = correct(children.first, spec);
    children.second = correct(children.second, spec);
    return children;
}

void select_replace(Population& population, uint32_t population_size) {
    if (population.size() != size_t{population_size} + 3) {
        throw std::invalid_argument("select_replace: expected population_size + 3 members");
    }
    std::sort(population.begin(), population.end(), better);
    population.resize(population_size);
}

SynthesisResult run(const EncodingSpec& spec, const Task& task, const GaConfig& config,
                    const GenerationObserver& observer) {
    if (config.population_size < 4) {
        throw std::invalid_argument("run: population_size must be >= 4");
    }
    if (config.crossover_probability < 0.0 || config.crossover_probability > 1.0 ||
        config.mutation_probability < 0.0 || config.mutation_probability > 1.0) {
        throw std::invalid_argument("run: probabilities must lie in [0, 1]");
    }
    if (spec.input_bits != task.required_input_bits() ||
        spec.action_count != task.required_action_count()) {
        throw std::invalid_argument("run: encoding shape does not match task");
    }

    Rng rng(config.seed);
    SynthesisResult result;

    Population population = init_population(spec, task, config, rng);
    result.evaluations = population.size();
    uint64_t next_birth = population.size();

    Individual best = *std::min_element(population.begin(), population.end(), better);
    bool goal_met = false;
    for (const Individual& ind : population) {
        if (meets_goal(ind.fitness, config)) {
            goal_met = true;
            break;
        }
    }

    GenStats stats = make_stats(0, population, best);
    result.stats.push_back(stats);
    if (observer) observer(population, stats);

    uint32_t generation = 0;
    while (!goal_met && generation < config.max_generations) {
        ++generation;

        // Offspring slots: two from crossover, one from mutation; failed
        // probability gates fill the slot with parent clones.
        const uint32_t p1 = tournament(population, rng);
        const uint32_t p2 = tournament(population, rng);
        std::pair<Genome, Genome> pair;
        if (rng.chance(config.crossover_probability)) {
            pair = crossover(population[p1].genome, population[p2].genome, spec,
                             config.crossover_kind, rng);
        } else {
            pair = {population[p1].genome, population[p2].genome};
        }
        const uint32_t p3 = tournament(population, rng);
        Genome third = rng.chance(config.mutation_probability)
                           ? mutate(population[p3].genome, spec, rng)
                           : population[p3].genome;

        Genome newcomers[3] = {std::move(pair.first), std::move(pair.second),
                               std::move(third)};
        for (Genome& genome : newcomers) {
            Individual ind;
            ind.genome = std::move(genome);
            ind.fitness = evaluate(ind.genome, spec, task, config);
            ind.birth = next_birth++;
            ++result.evaluations;
            if (better(ind, best)) best = ind;
            if (meets_goal(ind.fitness, config)) goal_met = true;
            population.push_back(std::move(ind));
        }

        select_replace(population, config.population_size);

        stats = make_stats(generation, population, best);
        result.stats.push_back(stats);
        if (observer) observer(population, stats);
    }

    result.best_genome = best.genome;
    result.best_machine = decode(best.genome, spec);
    result.best_fitness = best.fitness;
    result.generations_run = generation;
    return result;
}

}  // namespace fsmsynth
