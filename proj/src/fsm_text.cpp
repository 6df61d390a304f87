#include "fsmsynth/fsm_text.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsmsynth {

std::string write_machine_text(const MealyMachine& machine) {
    check_machine(machine, machine.spec);
    const EncodingSpec& spec = machine.spec;
    std::ostringstream out;
    out << "fsm " << spec.states << ' ' << spec.input_bits << ' '
        << spec.output_bits << ' ' << spec.action_count << '\n';
    for (uint32_t state = 0; state < spec.states; ++state) {
        for (uint32_t input = 0; input < spec.input_symbols(); ++input) {
            const uint32_t idx = machine.table_index(state, input);
            out << state << ' ' << input << ' ' << machine.next[idx] << ' '
                << machine.out[idx] << '\n';
        }
    }
    return out.str();
}

MealyMachine read_machine_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    uint32_t states = 0, input_bits = 0, output_bits = 0, action_count = 0;
    if (!(in >> tag) || tag != "fsm") {
        throw std::runtime_error("machine text: missing 'fsm' header");
    }
    if (!(in >> states >> input_bits >> output_bits >> action_count)) {
        throw std::runtime_error("machine text: malformed header");
    }
    const EncodingSpec spec = make_encoding(states, input_bits, output_bits, action_count);

    MealyMachine machine;
    machine.spec = spec;
    machine.next.assign(spec.gene_count, 0);
    machine.out.assign(spec.gene_count, 0);
    std::vector<uint8_t> seen(spec.gene_count, 0);
    for (uint32_t row = 0; row < spec.gene_count; ++row) {
        uint32_t state = 0, input = 0, next = 0, action = 0;
        if (!(in >> state >> input >> next >> action)) {
            throw std::runtime_error("machine text: expected " +
                                     std::to_string(spec.gene_count) +
                                     " transition lines, got " + std::to_string(row));
        }
        if (state >= spec.states || input >= spec.input_symbols()) {
            throw std::runtime_error("machine text: (state, input) out of range");
        }
        if (next >= spec.states) {
            throw std::runtime_error("machine text: next state out of range");
        }
        if (action >= spec.action_count) {
            throw std::runtime_error("machine text: action out of range");
        }
        const uint32_t idx = machine.table_index(state, input);
        if (seen[idx]) {
            throw std::runtime_error("machine text: duplicate (state, input) row");
        }
        seen[idx] = 1;
        machine.next[idx] = next;
        machine.out[idx] = action;
    }
    uint32_t extra = 0;
    if (in >> extra) {
        throw std::runtime_error("machine text: trailing data after transition table");
    }
    return machine;
}

MealyMachine load_machine_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open machine file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_machine_text(buf.str());
}

void save_machine_file(const MealyMachine& machine, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write machine file: " + path);
    }
    out << write_machine_text(machine);
}

}  // namespace fsmsynth
