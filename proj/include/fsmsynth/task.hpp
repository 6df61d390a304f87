#pragma once

#include <cstdint>

#include "fsmsynth/mealy.hpp"

namespace fsmsynth {

// Raw outcome of simulating one machine on one benchmark environment.
struct TaskEvaluation {
    bool feasible = false;        // task fully solved within its budget
    uint32_t iterations = 0;      // task moves/steps consumed (a2)
    double deficit = 0.0;         // unmet goal units; 0 when feasible
    double raw = 0.0;             // primary measure: food eaten, markers visited
    double final_distance = 0.0;  // helicopter tie-break; 0 elsewhere
};

// One benchmark environment. evaluate() must be pure and deterministic:
// identical machines give identical evaluations, so any number of
// evaluations may run concurrently.
class Task {
public:
    virtual ~Task() = default;

    virtual const char* name() const = 0;

    // Machine shape this task drives; synthesis builds its EncodingSpec
    // from these plus the requested state count.
    virtual uint32_t required_input_bits() const = 0;
    virtual uint32_t required_output_bits() const = 0;
    virtual uint32_t required_action_count() const = 0;

    virtual TaskEvaluation evaluate(const MealyMachine& machine) const = 0;
};

}  // namespace fsmsynth
