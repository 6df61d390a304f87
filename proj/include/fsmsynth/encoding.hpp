#pragma once

#include <cstdint>

namespace fsmsynth {

// Derived sizing for one synthesis problem: how a Mealy machine with S
// states, x input bits and y output bits maps onto a bit-string genome and
// onto a RAM whose address is state++input and whose data is next++output.
struct EncodingSpec {
    uint32_t states = 0;            // S
    uint32_t input_bits = 0;        // x
    uint32_t output_bits = 0;       // y
    uint32_t action_count = 0;      // A, number of valid output codes, <= 2^y
    uint32_t triggers = 0;          // T = max(1, ceil(log2 S)), state register width
    uint32_t gene_count = 0;        // p = S * 2^x
    uint32_t gene_bits = 0;         // T + y
    uint32_t genome_bits = 0;       // p * (T + y)
    uint32_t ram_address_bits = 0;  // T + x
    uint32_t ram_data_bits = 0;     // T + y

    uint32_t input_symbols() const { return 1u << input_bits; }

    bool operator==(const EncodingSpec&) const = default;
};

// Computes every derived field. Rejects zero arguments and
// action_count > 2^output_bits.
EncodingSpec make_encoding(uint32_t states, uint32_t input_bits,
                           uint32_t output_bits, uint32_t action_count);

}  // namespace fsmsynth
