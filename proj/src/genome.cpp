#include "fsmsynth/genome.hpp"

#include <stdexcept>

namespace fsmsynth {

namespace {

void check_shape(const Genome& genome, const EncodingSpec& spec, uint32_t gene) {
    if (genome.bits.size() != spec.genome_bits) {
        throw std::invalid_argument("genome length does not match spec");
    }
    if (gene >= spec.gene_count) {
        throw std::out_of_range("gene index out of range");
    }
}

uint32_t read_field(const Genome& genome, size_t offset, uint32_t width) {
    uint32_t value = 0;
    for (uint32_t b = 0; b < width; ++b) {
        value = (value << 1) | genome.bits[offset + b];
    }
    return value;
}

void write_field(Genome& genome, size_t offset, uint32_t width, uint32_t value) {
    for (uint32_t b = 0; b < width; ++b) {
        genome.bits[offset + b] = (value >> (width - 1 - b)) & 1u;
    }
}

}  // namespace

uint32_t gene_next_state(const Genome& genome, const EncodingSpec& spec, uint32_t gene) {
    check_shape(genome, spec, gene);
    return read_field(genome, size_t{gene} * spec.gene_bits, spec.triggers);
}

uint32_t gene_output(const Genome& genome, const EncodingSpec& spec, uint32_t gene) {
    check_shape(genome, spec, gene);
    return read_field(genome, size_t{gene} * spec.gene_bits + spec.triggers,
                      spec.output_bits);
}

void set_gene_next_state(Genome& genome, const EncodingSpec& spec, uint32_t gene,
                         uint32_t value) {
    check_shape(genome, spec, gene);
    if (value >= (1u << spec.triggers)) {
        throw std::out_of_range("next-state value does not fit in trigger field");
    }
    write_field(genome, size_t{gene} * spec.gene_bits, spec.triggers, value);
}

void set_gene_output(Genome& genome, const EncodingSpec& spec, uint32_t gene,
                     uint32_t value) {
    check_shape(genome, spec, gene);
    if (value >= (1u << spec.output_bits)) {
        throw std::out_of_range("output value does not fit in output field");
    }
    write_field(genome, size_t{gene} * spec.gene_bits + spec.triggers,
                spec.output_bits, value);
}

bool is_corrected(const Genome& genome, const EncodingSpec& spec) {
    if (genome.bits.size() != spec.genome_bits) {
        return false;
    }
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        if (gene_next_state(genome, spec, g) >= spec.states) return false;
        if (gene_output(genome, spec, g) >= spec.action_count) return false;
    }
    return true;
}

Genome correct(const Genome& genome, const EncodingSpec& spec) {
    if (genome.bits.size() != spec.genome_bits) {
        throw std::invalid_argument("correct: genome length does not match spec");
    }
    Genome repaired = genome;
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        set_gene_next_state(repaired, spec, g,
                            gene_next_state(repaired, spec, g) % spec.states);
        set_gene_output(repaired, spec, g,
                        gene_output(repaired, spec, g) % spec.action_count);
    }
    return repaired;
}

}  // namespace fsmsynth
