#include "fsmsynth/santafe.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsmsynth::santafe {

TrailWorld load_trail(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(current);
                current.clear();
            } else if (c != '\r') {
                current.push_back(c);
            }
        }
        if (!current.empty()) lines.push_back(current);
    }
    if (lines.size() != kGridHeight) {
        throw std::runtime_error("trail: expected " + std::to_string(kGridHeight) +
                                 " lines, got " + std::to_string(lines.size()));
    }

    TrailWorld world;
    world.food.assign(size_t{kGridWidth} * kGridHeight, 0);
    uint32_t starts = 0;
    for (uint32_t y = 0; y < kGridHeight; ++y) {
        const std::string& line = lines[y];
        if (line.size() != kGridWidth) {
            throw std::runtime_error("trail: line " + std::to_string(y) + " has " +
                                     std::to_string(line.size()) + " characters, expected " +
                                     std::to_string(kGridWidth));
        }
        for (uint32_t x = 0; x < kGridWidth; ++x) {
            switch (line[x]) {
                case '#':
                    world.food[size_t{y} * kGridWidth + x] = 1;
                    ++world.food_count;
                    break;
                case '.':
                    break;
                case 'S':
                    ++starts;
                    world.start = {static_cast<uint8_t>(x), static_cast<uint8_t>(y)};
                    world.start_heading = Heading::East;
                    break;
                default:
                    throw std::runtime_error(std::string("trail: unknown character '") +
                                             line[x] + "' at line " + std::to_string(y));
            }
        }
    }
    if (starts != 1) {
        throw std::runtime_error("trail: expected exactly one 'S' start cell, got " +
                                 std::to_string(starts));
    }
    return world;
}

TrailWorld load_trail_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open trail file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_trail(buf.str());
}

const TrailWorld& canonical_trail() {
    static const TrailWorld world = load_trail(canonical_trail_text());
    return world;
}

Cell cell_ahead(Cell position, Heading heading) {
    uint32_t x = position.x;
    uint32_t y = position.y;
    switch (heading) {
        case Heading::East: x = (x + 1) % kGridWidth; break;
        case Heading::West: x = (x + kGridWidth - 1) % kGridWidth; break;
        case Heading::North: y = (y + kGridHeight - 1) % kGridHeight; break;
        case Heading::South: y = (y + 1) % kGridHeight; break;
    }
    return {static_cast<uint8_t>(x), static_cast<uint8_t>(y)};
}

uint32_t sense(const TrailWorld& world, const AntState& ant) {
    return world.has_food(cell_ahead(ant.position, ant.heading)) ? 1u : 0u;
}

void apply_action(TrailWorld& world, AntState& ant, uint32_t action) {
    switch (action) {
        case kForward: {
            ant.position = cell_ahead(ant.position, ant.heading);
            auto& cell = world.food[size_t{ant.position.y} * kGridWidth + ant.position.x];
            if (cell) {
                cell = 0;
                ++ant.food_eaten;
            }
            break;
        }
        case kTurnLeft:
            ant.heading = static_cast<Heading>((static_cast<uint32_t>(ant.heading) + 1) % 4);
            break;
        case kTurnRight:
            ant.heading = static_cast<Heading>((static_cast<uint32_t>(ant.heading) + 3) % 4);
            break;
        default:
            throw std::out_of_range("ant action code out of range");
    }
    ++ant.moves_used;
}

AntResult simulate_ant(const MealyMachine& machine, const TrailWorld& world,
                       uint32_t max_moves, std::vector<AntTraceEntry>* trace) {
    if (machine.spec.input_bits != kInputBits ||
        machine.spec.action_count != kActionCount) {
        throw std::invalid_argument(
            "simulate_ant: machine must have 1 input bit and 3 actions");
    }

    TrailWorld field = world;  // simulation consumes food from a private copy
    AntState ant;
    ant.position = field.start;
    ant.heading = field.start_heading;

    const uint32_t total_food = field.food_count;
    uint32_t state = MealyMachine::kInitialState;

    AntResult result;
    result.moves_to_finish = max_moves;
    if (total_food == 0) {
        result.moves_to_finish = 0;
        return result;
    }

    while (ant.moves_used < max_moves && ant.food_eaten < total_food) {
        const uint32_t input = sense(field, ant);
        const StepResult sr = step(machine, state, input);
        if (trace) {
            trace->push_back({ant.moves_used, state, input, sr.action, 0});
        }
        state = sr.next_state;
        apply_action(field, ant, sr.action);
        if (trace) {
            trace->back().food_eaten = ant.food_eaten;
        }
        if (ant.food_eaten == total_food) {
            result.moves_to_finish = ant.moves_used;
        }
    }
    result.food_eaten = ant.food_eaten;
    return result;
}

TaskEvaluation AntTask::evaluate(const MealyMachine& machine) const {
    const AntResult result = simulate_ant(machine, world_, max_moves_);
    TaskEvaluation eval;
    eval.feasible = result.food_eaten == world_.food_count;
    eval.iterations = result.moves_to_finish;
    eval.deficit = static_cast<double>(world_.food_count - result.food_eaten);
    eval.raw = static_cast<double>(result.food_eaten);
    return eval;
}

}  // namespace fsmsynth::santafe
