#pragma once

#include <string>
#include <string_view>

#include "fsmsynth/encoding.hpp"
#include "fsmsynth/mealy.hpp"
#include "fsmsynth/ram_image.hpp"

namespace fsmsynth::hw {

// The three textual realizations of one machine's RAM truth table. Each
// rendering is byte-deterministic and decodes back to the same RamImage.
struct ExportBundle {
    std::string truth_table;
    std::string mif;
    std::string hdl;
    EncodingSpec meta;
};

// Plain truth table: header `address[A-1:0] data[D-1:0]`, then one line per
// address ascending, both columns binary MSB-first.
std::string export_truth_table(const RamImage& ram);

// Memory initialization file: DEPTH/WIDTH, binary radixes, `addr : word;`
// lines ascending.
std::string export_mif(const RamImage& ram);

// Synchronous Verilog module: T-bit state register with synchronous reset
// to state 0, address = {state, in}, constant word table, combinational
// outputs from the low data bits.
std::string export_hdl(const RamImage& ram, const EncodingSpec& spec,
                       std::string_view module_name);

ExportBundle make_bundle(const MealyMachine& machine, std::string_view module_name);

// Inverse readers used to prove decode-back equality.
RamImage parse_truth_table(std::string_view text);
RamImage parse_mif(std::string_view text);
RamImage parse_hdl(std::string_view text);

bool is_valid_module_name(std::string_view name);

}  // namespace fsmsynth::hw
