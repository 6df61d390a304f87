#include "fsmsynth/encoding.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace fsmsynth {

namespace {

// Caps keep every derived quantity well inside uint32_t.
constexpr uint32_t kMaxStates = 1u << 20;
constexpr uint32_t kMaxInputBits = 16;
constexpr uint32_t kMaxOutputBits = 16;

}  // namespace

EncodingSpec make_encoding(uint32_t states, uint32_t input_bits,
                           uint32_t output_bits, uint32_t action_count) {
    if (states == 0) {
        throw std::invalid_argument("make_encoding: states must be >= 1");
    }
    if (input_bits == 0) {
        throw std::invalid_argument("make_encoding: input_bits must be >= 1");
    }
    if (output_bits == 0) {
        throw std::invalid_argument("make_encoding: output_bits must be >= 1");
    }
    if (action_count == 0) {
        throw std::invalid_argument("make_encoding: action_count must be >= 1");
    }
    if (states > kMaxStates || input_bits > kMaxInputBits ||
        output_bits > kMaxOutputBits) {
        throw std::invalid_argument("make_encoding: problem size out of supported range");
    }
    if (static_cast<uint64_t>(action_count) > (uint64_t{1} << output_bits)) {
        throw std::invalid_argument(
            "make_encoding: action_count " + std::to_string(action_count) +
            " exceeds 2^output_bits");
    }

    EncodingSpec spec;
    spec.states = states;
    spec.input_bits = input_bits;
    spec.output_bits = output_bits;
    spec.action_count = action_count;
    // T = max(1, ceil(log2 S)); S=1 still gets one trigger.
    spec.triggers = states <= 1 ? 1 : std::bit_width(states - 1);
    spec.gene_count = states << input_bits;
    spec.gene_bits = spec.triggers + output_bits;
    spec.genome_bits = spec.gene_count * spec.gene_bits;
    spec.ram_address_bits = spec.triggers + input_bits;
    spec.ram_data_bits = spec.triggers + output_bits;
    return spec;
}

}  // namespace fsmsynth
