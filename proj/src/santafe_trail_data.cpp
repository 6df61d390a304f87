#include "fsmsynth/santafe.hpp"

namespace fsmsynth::santafe {

// Byte-identical to data/santafe.trail.
std::string_view canonical_trail_text() {
    static constexpr char kTrail[] =
        "S###............................\n"
        "...#............................\n"
        "...#.....................###....\n"
        "...#....................#....#..\n"
        "...#....................#....#..\n"
        "...####.#####........##.........\n"
        "............#................#..\n"
        "............#.......#...........\n"
        "............#.......#........#..\n"
        "............#.......#...........\n"
        "....................#...........\n"
        "............#................#..\n"
        "............#...................\n"
        "............#.......#.....###...\n"
        "............#.......#..#........\n"
        ".................#..............\n"
        "................................\n"
        "............#...........#.......\n"
        "............#...#..........#....\n"
        "............#...#...............\n"
        "............#...#...............\n"
        "............#...#.........#.....\n"
        "............#..........#........\n"
        "............#...................\n"
        "...##..#####....#...............\n"
        ".#..............#...............\n"
        ".#..............#...............\n"
        ".#......#######.................\n"
        ".#.....#........................\n"
        ".......#........................\n"
        "..####..........................\n"
        "................................\n"
;
    return {kTrail, sizeof(kTrail) - 1};
}

}  // namespace fsmsynth::santafe
