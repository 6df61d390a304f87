#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fsmsynth/rng.hpp"
#include "fsmsynth/santafe.hpp"
#include "support.hpp"

using namespace fsmsynth;
using namespace fsmsynth::santafe;

namespace {

MealyMachine constant_action_machine(uint32_t action) {
    const EncodingSpec spec = make_encoding(1, kInputBits, kOutputBits, kActionCount);
    MealyMachine machine;
    machine.spec = spec;
    machine.next.assign(spec.gene_count, 0);
    machine.out.assign(spec.gene_count, action);
    return machine;
}

// 32x32 all-dots board with S at (0,0) and food at the given cells.
std::string board_with_food(const std::vector<std::pair<uint32_t, uint32_t>>& cells) {
    std::vector<std::string> rows(kGridHeight, std::string(kGridWidth, '.'));
    rows[0][0] = 'S';
    for (auto [x, y] : cells) rows[y][x] = '#';
    std::string text;
    for (const std::string& row : rows) text += row + '\n';
    return text;
}

MealyMachine random_ant_machine(uint32_t states, Rng& rng) {
    const EncodingSpec spec = make_encoding(states, kInputBits, kOutputBits, kActionCount);
    MealyMachine machine;
    machine.spec = spec;
    machine.next.resize(spec.gene_count);
    machine.out.resize(spec.gene_count);
    for (uint32_t g = 0; g < spec.gene_count; ++g) {
        machine.next[g] = rng.index(spec.states);
        machine.out[g] = rng.index(spec.action_count);
    }
    return machine;
}

}  // namespace

TEST_CASE("the canonical trail matches its shipped file and its counts") {
    const TrailWorld& world = canonical_trail();
    CHECK(world.food_count == kCanonicalFoodCells);
    CHECK(world.start == Cell{0, 0});
    CHECK(world.start_heading == Heading::East);
    CHECK(canonical_trail_text() == slurp(data_path("santafe.trail")));

    // The first trail segment runs east from the start.
    CHECK(world.has_food(Cell{1, 0}));
    CHECK(world.has_food(Cell{2, 0}));
    CHECK(world.has_food(Cell{3, 0}));
    CHECK_FALSE(world.has_food(Cell{4, 0}));
}

TEST_CASE("trail parsing rejects malformed boards") {
    const std::string good = board_with_food({{5, 5}});
    CHECK_NOTHROW(load_trail(good));

    std::string short_board = good;
    short_board.erase(0, kGridWidth + 1);  // drop the first row
    CHECK_THROWS(load_trail(short_board));

    std::string ragged = good;
    ragged.insert(0, ".");  // first row now 33 wide
    CHECK_THROWS(load_trail(ragged));

    std::string alien = good;
    alien[5] = 'x';
    CHECK_THROWS(load_trail(alien));

    std::string no_start = good;
    no_start[0] = '.';
    CHECK_THROWS(load_trail(no_start));

    std::string two_starts = good;
    two_starts[2] = 'S';
    CHECK_THROWS(load_trail(two_starts));
}

TEST_CASE("movement wraps on the torus") {
    CHECK(cell_ahead({0, 0}, Heading::East) == Cell{1, 0});
    CHECK(cell_ahead({31, 0}, Heading::East) == Cell{0, 0});
    CHECK(cell_ahead({0, 0}, Heading::West) == Cell{31, 0});
    CHECK(cell_ahead({0, 0}, Heading::North) == Cell{0, 31});
    CHECK(cell_ahead({0, 31}, Heading::South) == Cell{0, 0});
    CHECK(cell_ahead({7, 9}, Heading::South) == Cell{7, 10});
}

TEST_CASE("turning cycles the heading; forward advances and eats") {
    TrailWorld world = load_trail(board_with_food({{1, 0}}));
    AntState ant;
    ant.position = world.start;
    ant.heading = world.start_heading;

    apply_action(world, ant, kTurnLeft);
    CHECK(ant.heading == Heading::North);
    apply_action(world, ant, kTurnLeft);
    CHECK(ant.heading == Heading::West);
    apply_action(world, ant, kTurnLeft);
    CHECK(ant.heading == Heading::South);
    apply_action(world, ant, kTurnLeft);
    CHECK(ant.heading == Heading::East);
    apply_action(world, ant, kTurnRight);
    CHECK(ant.heading == Heading::South);
    apply_action(world, ant, kTurnRight);
    CHECK(ant.heading == Heading::West);
    CHECK(ant.moves_used == 6);
    CHECK(ant.position == world.start);

    ant.heading = Heading::East;
    apply_action(world, ant, kForward);
    CHECK(ant.position == Cell{1, 0});
    CHECK(ant.food_eaten == 1);
    CHECK_FALSE(world.has_food(Cell{1, 0}));  // food is consumed

    CHECK_THROWS_AS(apply_action(world, ant, 3), std::out_of_range);
}

TEST_CASE("the sensor reads the cell directly ahead") {
    const TrailWorld world = canonical_trail();
    AntState ant;
    ant.position = world.start;
    ant.heading = Heading::East;
    CHECK(sense(world, ant) == 1);  // food at (1,0)
    ant.heading = Heading::North;   // wraps to (0,31), which is bare
    CHECK(sense(world, ant) == 0);
}

TEST_CASE("an always-forward ant eats exactly the first straight segment") {
    const MealyMachine machine = constant_action_machine(kForward);
    const AntResult result = simulate_ant(machine, canonical_trail());
    CHECK(result.food_eaten == 3);
    CHECK(result.moves_to_finish == kDefaultMaxMoves);
}

TEST_CASE("an always-turning ant eats nothing") {
    const MealyMachine machine = constant_action_machine(kTurnLeft);
    const AntResult result = simulate_ant(machine, canonical_trail());
    CHECK(result.food_eaten == 0);
    CHECK(result.moves_to_finish == kDefaultMaxMoves);
}

TEST_CASE("finishing early freezes the move count at the last bite") {
    const TrailWorld world = load_trail(board_with_food({{1, 0}, {2, 0}, {3, 0}}));
    const MealyMachine machine = constant_action_machine(kForward);
    const AntResult result = simulate_ant(machine, world);
    CHECK(result.food_eaten == 3);
    CHECK(result.moves_to_finish == 3);

    // Replaying with exactly that budget reproduces the feast.
    const AntResult replay = simulate_ant(machine, world, result.moves_to_finish);
    CHECK(replay.food_eaten == 3);
    CHECK(replay.moves_to_finish == 3);

    // One move fewer leaves the last crumb.
    const AntResult starved = simulate_ant(machine, world, result.moves_to_finish - 1);
    CHECK(starved.food_eaten == 2);
}

TEST_CASE("an empty board is finished before the first move") {
    const TrailWorld world = load_trail(board_with_food({}));
    const MealyMachine machine = constant_action_machine(kForward);
    const AntResult result = simulate_ant(machine, world);
    CHECK(result.food_eaten == 0);
    CHECK(result.moves_to_finish == 0);
}

TEST_CASE("simulation never mutates the shared world") {
    const TrailWorld& world = canonical_trail();
    Rng rng(555);
    for (int round = 0; round < 50; ++round) {
        const MealyMachine machine = random_ant_machine(4, rng);
        const AntResult first = simulate_ant(machine, world);
        CHECK(first.food_eaten <= world.food_count);
        CHECK(first.moves_to_finish <= kDefaultMaxMoves);
        const AntResult second = simulate_ant(machine, world);
        CHECK(first.food_eaten == second.food_eaten);
        CHECK(first.moves_to_finish == second.moves_to_finish);
    }
    CHECK(world.food_count == kCanonicalFoodCells);
    CHECK(world.has_food(Cell{1, 0}));
}

TEST_CASE("the trace mirrors the simulation step by step") {
    const TrailWorld world = load_trail(board_with_food({{1, 0}, {3, 0}}));
    const MealyMachine machine = constant_action_machine(kForward);
    std::vector<AntTraceEntry> trace;
    const AntResult result = simulate_ant(machine, world, 10, &trace);
    CHECK(result.food_eaten == 2);
    CHECK(result.moves_to_finish == 3);
    REQUIRE(trace.size() == 3);
    for (size_t i = 0; i < trace.size(); ++i) {
        CHECK(trace[i].move_index == i);
        CHECK(trace[i].state == 0);
        CHECK(trace[i].action == kForward);
    }
    CHECK(trace[0].input == 1);  // food at (1,0)
    CHECK(trace[0].food_eaten == 1);
    CHECK(trace[1].input == 0);  // gap at (2,0)
    CHECK(trace[1].food_eaten == 1);
    CHECK(trace[2].input == 1);  // food at (3,0)
    CHECK(trace[2].food_eaten == 2);
}

TEST_CASE("machines of the wrong shape are rejected") {
    const EncodingSpec wide = make_encoding(2, 2, 2, 3);
    MealyMachine machine;
    machine.spec = wide;
    machine.next.assign(wide.gene_count, 0);
    machine.out.assign(wide.gene_count, 0);
    CHECK_THROWS_AS(simulate_ant(machine, canonical_trail()), std::invalid_argument);
}

TEST_CASE("task evaluation exposes feasibility, deficit, and iterations") {
    const TrailWorld world = load_trail(board_with_food({{1, 0}, {2, 0}, {3, 0}}));
    const AntTask task(world);

    const TaskEvaluation fed = task.evaluate(constant_action_machine(kForward));
    CHECK(fed.feasible);
    CHECK(fed.iterations == 3);
    CHECK(fed.raw == 3.0);
    CHECK(fed.deficit == 0.0);
    CHECK(fed.final_distance == 0.0);

    const TaskEvaluation starved = task.evaluate(constant_action_machine(kTurnRight));
    CHECK_FALSE(starved.feasible);
    CHECK(starved.iterations == kDefaultMaxMoves);
    CHECK(starved.raw == 0.0);
    CHECK(starved.deficit == 3.0);
}
