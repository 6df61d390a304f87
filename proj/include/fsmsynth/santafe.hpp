#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fsmsynth/mealy.hpp"
#include "fsmsynth/task.hpp"

namespace fsmsynth::santafe {

inline constexpr uint32_t kGridWidth = 32;
inline constexpr uint32_t kGridHeight = 32;
inline constexpr uint32_t kDefaultMaxMoves = 200;
inline constexpr uint32_t kCanonicalFoodCells = 89;

// Machine shape the ant drives: 1 input bit (food ahead), 3 actions.
inline constexpr uint32_t kInputBits = 1;
inline constexpr uint32_t kOutputBits = 2;
inline constexpr uint32_t kActionCount = 3;

enum AntAction : uint32_t {
    kForward = 0,   // move one cell, eating any food in the destination
    kTurnLeft = 1,
    kTurnRight = 2,
};

// Counterclockwise order so a left turn is +1 mod 4. Rows grow southward.
enum class Heading : uint8_t { East = 0, North = 1, West = 2, South = 3 };

struct Cell {
    uint8_t x = 0;  // column
    uint8_t y = 0;  // row

    bool operator==(const Cell&) const = default;
};

// Toroidal 32x32 field. Immutable template for simulations, which consume
// food from their own private copy.
struct TrailWorld {
    std::vector<uint8_t> food;  // kGridWidth * kGridHeight, 1 = food present
    uint32_t food_count = 0;
    Cell start;
    Heading start_heading = Heading::East;

    bool has_food(Cell c) const { return food[size_t{c.y} * kGridWidth + c.x] != 0; }
};

struct AntState {
    Cell position;
    Heading heading = Heading::East;
    uint32_t food_eaten = 0;
    uint32_t moves_used = 0;
};

struct AntTraceEntry {
    uint32_t move_index;  // 0-based, before the action
    uint32_t state;       // machine state before the transition
    uint32_t input;
    uint32_t action;
    uint32_t food_eaten;  // after the action
};

struct AntResult {
    uint32_t food_eaten = 0;
    // Moves used at the instant the last food was eaten, else max_moves.
    uint32_t moves_to_finish = 0;
};

// Parses 32 lines of 32 characters over {#, ., S}: '#' food, 'S' the start
// cell (exactly one, facing east, no food on it).
TrailWorld load_trail(std::string_view text);
TrailWorld load_trail_file(const std::string& path);

// The canonical 89-food trail shipped with the project (data/santafe.trail).
const TrailWorld& canonical_trail();
std::string_view canonical_trail_text();

Cell cell_ahead(Cell position, Heading heading);

// 1 iff the cell one step along the heading currently holds food.
uint32_t sense(const TrailWorld& world, const AntState& ant);

// Applies one of the three actions; moves_used always advances by one.
void apply_action(TrailWorld& world, AntState& ant, uint32_t action);

// Runs the machine from state 0 and the start pose until all food is eaten
// or max_moves actions have been taken. Pure in (machine, world).
AntResult simulate_ant(const MealyMachine& machine, const TrailWorld& world,
                       uint32_t max_moves = kDefaultMaxMoves,
                       std::vector<AntTraceEntry>* trace = nullptr);

class AntTask final : public Task {
public:
    AntTask(TrailWorld world, uint32_t max_moves = kDefaultMaxMoves)
        : world_(std::move(world)), max_moves_(max_moves) {}

    const char* name() const override { return "santafe"; }
    uint32_t required_input_bits() const override { return kInputBits; }
    uint32_t required_output_bits() const override { return kOutputBits; }
    uint32_t required_action_count() const override { return kActionCount; }

    // feasible = all food eaten; a2 = moves to finish; deficit = food left.
    TaskEvaluation evaluate(const MealyMachine& machine) const override;

    const TrailWorld& world() const { return world_; }
    uint32_t max_moves() const { return max_moves_; }

private:
    TrailWorld world_;
    uint32_t max_moves_;
};

}  // namespace fsmsynth::santafe
