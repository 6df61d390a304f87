#include "fsmsynth/mealy.hpp"

#include <stdexcept>

namespace fsmsynth {

MealyMachine decode(const Genome& genome, const EncodingSpec& spec) {
    if (genome.bits.size() != spec.genome_bits) {
        throw std::invalid_argument("decode: genome length does not match spec");
    }
    MealyMachine machine;
    machine.spec = spec;
    machine.next.resize(spec.gene_count);
    machine.out.resize(spec.gene_count);
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        const uint32_t next = gene_next_state(genome, spec, g);
        const uint32_t out = gene_output(genome, spec, g);
        if (next >= spec.states || out >= spec.action_count) {
            throw std::invalid_argument("decode: genome is not corrected");
        }
        machine.next[g] = next;
        machine.out[g] = out;
    }
    return machine;
}

Genome encode(const MealyMachine& machine, const EncodingSpec& spec) {
    check_machine(machine, spec);
    Genome genome;
    genome.bits.assign(spec.genome_bits, 0);
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        set_gene_next_state(genome, spec, g, machine.next[g]);
        set_gene_output(genome, spec, g, machine.out[g]);
    }
    return genome;
}

StepResult step(const MealyMachine& machine, uint32_t state, uint32_t input_symbol) {
    if (state >= machine.spec.states) {
        throw std::out_of_range("step: state index out of range");
    }
    if (input_symbol >= machine.spec.input_symbols()) {
        throw std::out_of_range("step: input symbol out of range");
    }
    const uint32_t idx = machine.table_index(state, input_symbol);
    return {machine.next[idx], machine.out[idx]};
}

uint32_t reachable_states(const MealyMachine& machine) {
    const uint32_t symbols = machine.spec.input_symbols();
    std::vector<uint8_t> seen(machine.spec.states, 0);
    std::vector<uint32_t> frontier{MealyMachine::kInitialState};
    seen[MealyMachine::kInitialState] = 1;
    uint32_t count = 1;
    while (!frontier.empty()) {
        const uint32_t state = frontier.back();
        frontier.pop_back();
        for (uint32_t i = 0; i < symbols; ++i) {
            const uint32_t next = machine.next[machine.table_index(state, i)];
            if (!seen[next]) {
                seen[next] = 1;
                ++count;
                frontier.push_back(next);
            }
        }
    }
    return count;
}

void check_machine(const MealyMachine& machine, const EncodingSpec& spec) {
    if (machine.spec != spec) {
        throw std::invalid_argument("machine spec does not match expected spec");
    }
    if (machine.next.size() != spec.gene_count || machine.out.size() != spec.gene_count) {
        throw std::invalid_argument("machine table size does not match spec");
    }
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        if (machine.next[g] >= spec.states) {
            throw std::invalid_argument("machine next-state entry out of range");
        }
        if (machine.out[g] >= spec.action_count) {
            throw std::invalid_argument("machine output entry out of range");
        }
    }
}

}  // namespace fsmsynth
