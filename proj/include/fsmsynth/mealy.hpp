#pragma once

#include <cstdint>
#include <vector>

#include "fsmsynth/encoding.hpp"
#include "fsmsynth/genome.hpp"

namespace fsmsynth {

// Decoded phenotype: total next-state/output tables over S x 2^x, indexed by
// (state << x) | input_symbol. The initial state is always state 0.
struct MealyMachine {
    EncodingSpec spec;
    std::vector<uint32_t> next;  // gene_count entries, each < S
    std::vector<uint32_t> out;   // gene_count entries, each < A

    static constexpr uint32_t kInitialState = 0;

    uint32_t table_index(uint32_t state, uint32_t input_symbol) const {
        return (state << spec.input_bits) | input_symbol;
    }

    bool operator==(const MealyMachine&) const = default;
};

struct StepResult {
    uint32_t next_state;
    uint32_t action;
};

// Unpacks a corrected genome into tables. Rejects out-of-range fields.
MealyMachine decode(const Genome& genome, const EncodingSpec& spec);

// Exact inverse of decode; the result is corrected by construction.
Genome encode(const MealyMachine& machine, const EncodingSpec& spec);

// One synchronous lookup. Pure; throws on out-of-range state or symbol.
StepResult step(const MealyMachine& machine, uint32_t state, uint32_t input_symbol);

// Number of states discoverable from state 0 via the next table (a1).
uint32_t reachable_states(const MealyMachine& machine);

// Shape/range validity of a machine against a spec.
void check_machine(const MealyMachine& machine, const EncodingSpec& spec);

}  // namespace fsmsynth
