#pragma once

#include <string>
#include <string_view>

#include "fsmsynth/mealy.hpp"

namespace fsmsynth {

// Machine interchange text format, one machine per file:
//   fsm S x y A
//   state input next action        (one line per (state, input), gene order)
// All values decimal.
std::string write_machine_text(const MealyMachine& machine);
MealyMachine read_machine_text(std::string_view text);

MealyMachine load_machine_file(const std::string& path);
void save_machine_file(const MealyMachine& machine, const std::string& path);

}  // namespace fsmsynth
