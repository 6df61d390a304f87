#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fsmsynth/fsm_text.hpp"
#include "fsmsynth/rng.hpp"
#include "support.hpp"

using namespace fsmsynth;

namespace {

MealyMachine random_machine(const EncodingSpec& spec, Rng& rng) {
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

TEST_CASE("write/read round trip") {
    Rng rng(2718);
    for (uint32_t s : {1u, 2u, 4u, 5u, 8u, 12u}) {
        const EncodingSpec spec = make_encoding(s, 1, 2, 3);
        for (int round = 0; round < 25; ++round) {
            const MealyMachine machine = random_machine(spec, rng);
            CHECK(read_machine_text(write_machine_text(machine)) == machine);
        }
    }
}

TEST_CASE("reference machine file loads to the hand-built table") {
    const MealyMachine machine = load_machine_file(data_path("reference4.fsm"));
    CHECK(machine.spec == make_encoding(4, 1, 2, 3));
    CHECK(machine.next == std::vector<uint32_t>{1, 0, 2, 0, 3, 1, 0, 2});
    CHECK(machine.out == std::vector<uint32_t>{0, 2, 1, 0, 2, 1, 0, 2});
}

TEST_CASE("malformed machine text is rejected") {
    CHECK_THROWS(read_machine_text(""));
    CHECK_THROWS(read_machine_text("mealy 2 1 1 2\n"));
    // wrong row count
    CHECK_THROWS(read_machine_text("fsm 2 1 1 2\n0 0 0 0\n"));
    // next state out of range
    CHECK_THROWS(read_machine_text("fsm 2 1 1 2\n0 0 2 0\n0 1 0 0\n1 0 0 0\n1 1 0 0\n"));
    // action out of range
    CHECK_THROWS(read_machine_text("fsm 2 1 1 2\n0 0 0 2\n0 1 0 0\n1 0 0 0\n1 1 0 0\n"));
    // duplicate (state, input) row
    CHECK_THROWS(read_machine_text("fsm 2 1 1 2\n0 0 0 0\n0 0 0 0\n1 0 0 0\n1 1 0 0\n"));
    // trailing data
    CHECK_THROWS(
        read_machine_text("fsm 2 1 1 2\n0 0 0 0\n0 1 0 0\n1 0 0 0\n1 1 0 0\n9\n"));
    // header that cannot form an encoding
    CHECK_THROWS(read_machine_text("fsm 2 1 1 3\n0 0 0 0\n0 1 0 0\n1 0 0 0\n1 1 0 0\n"));
}

TEST_CASE("rows may arrive in any order") {
    const std::string text = "fsm 2 1 1 2\n1 1 0 0\n0 0 1 1\n1 0 1 0\n0 1 0 1\n";
    const MealyMachine machine = read_machine_text(text);
    CHECK(machine.next == std::vector<uint32_t>{1, 0, 1, 0});
    CHECK(machine.out == std::vector<uint32_t>{1, 1, 0, 0});
}

TEST_CASE("missing file reports its path") {
    CHECK_THROWS_WITH_AS(load_machine_file("/nonexistent/machine.fsm"),
                         doctest::Contains("/nonexistent/machine.fsm"),
                         std::runtime_error);
}
