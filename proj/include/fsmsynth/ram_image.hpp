#pragma once

#include <cstdint>
#include <vector>

#include "fsmsynth/encoding.hpp"
#include "fsmsynth/mealy.hpp"

namespace fsmsynth {

// Address-indexed word table realizing the machine's combinational logic.
// Address = (state << x) | input_symbol, word = (next_state << y) | action.
struct RamImage {
    uint32_t address_bits = 0;  // T + x
    uint32_t data_bits = 0;     // T + y
    std::vector<uint32_t> words;  // 2^address_bits entries

    bool operator==(const RamImage&) const = default;
};

// Addresses whose state field is >= S (possible when 2^T > S) hold all-zero
// words.
RamImage to_ram_image(const MealyMachine& machine, const EncodingSpec& spec);

}  // namespace fsmsynth
