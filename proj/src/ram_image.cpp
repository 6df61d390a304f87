#include "fsmsynth/ram_image.hpp"

namespace fsmsynth {

RamImage to_ram_image(const MealyMachine& machine, const EncodingSpec& spec) {
    check_machine(machine, spec);
    RamImage image;
    image.address_bits = spec.ram_address_bits;
    image.data_bits = spec.ram_data_bits;
    image.words.assign(size_t{1} << image.address_bits, 0);
    for (uint32_t state = 0; state < spec.states; ++state) {
        for (uint32_t input = 0; input < spec.input_symbols(); ++input) {
            const uint32_t idx = machine.table_index(state, input);
            image.words[idx] = (machine.next[idx] << spec.output_bits) | machine.out[idx];
        }
    }
    return image;
}

}  // namespace fsmsynth
