#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fsmsynth/encoding.hpp"

namespace fsmsynth {

// Fixed-length bit string. Gene g occupies bits [g*gene_bits, (g+1)*gene_bits)
// for g = state * 2^x + input_symbol: first the next-state field (T bits),
// then the output field (y bits), both most-significant-bit first.
struct Genome {
    std::vector<uint8_t> bits;  // one 0/1 value per element

    size_t size() const { return bits.size(); }

    bool operator==(const Genome&) const = default;
};

uint32_t gene_next_state(const Genome& genome, const EncodingSpec& spec, uint32_t gene);
uint32_t gene_output(const Genome& genome, const EncodingSpec& spec, uint32_t gene);
void set_gene_next_state(Genome& genome, const EncodingSpec& spec, uint32_t gene, uint32_t value);
void set_gene_output(Genome& genome, const EncodingSpec& spec, uint32_t gene, uint32_t value);

// True iff every gene has next-state < S and output < A.
bool is_corrected(const Genome& genome, const EncodingSpec& spec);

// Transition correction: field-wise modular repair (next mod S, output
// mod A). Idempotent; genes already in range come back bit-identical.
Genome correct(const Genome& genome, const EncodingSpec& spec);

}  // namespace fsmsynth
