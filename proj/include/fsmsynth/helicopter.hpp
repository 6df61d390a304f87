#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fsmsynth/mealy.hpp"
#include "fsmsynth/task.hpp"

namespace fsmsynth::heli {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Machine shape: ceil(log2 K) input bits, 4 actions on 2 output bits.
inline constexpr uint32_t kOutputBits = 2;
inline constexpr uint32_t kActionCount = 4;

enum HeliAction : uint32_t {
    kRotateLeft = 0,   // heading += turn_angle
    kRotateRight = 1,  // heading -= turn_angle
    kAccelerate = 2,
    kDecelerate = 3,
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

double distance(Vec2 a, Vec2 b);

// Environment constants. Defaults are tuned so seeded 20-marker courses in
// the default bounds are solvable within the time limit.
struct HeliParams {
    uint32_t sectors = 4;                    // K, sight sectors
    double turn_angle = kTwoPi / 16.0;       // radians per rotate action
    double velocity_step = 0.5;              // speed change per action
    double v_min = 0.0;
    double v_max = 5.0;
    double capture_radius = 5.0;
    uint32_t time_limit = 1000;              // steps
};

uint32_t input_bits_for_sectors(uint32_t sectors);  // ceil(log2 K)

struct HeliState {
    Vec2 position;
    double heading = 0.0;  // radians in [0, 2pi)
    double speed = 0.0;
};

// Ordered markers; they must be visited strictly in order.
struct Course {
    std::vector<Vec2> markers;
    HeliState start;
};

struct Bounds {
    double width = 400.0;
    double height = 400.0;
};

// N markers drawn uniformly inside bounds from the seeded generator, every
// pair at least min_separation apart (bounded rejection); start pose at the
// bounds center, heading 0, speed start_speed.
Course generate_course(uint64_t seed, uint32_t marker_count, Bounds bounds,
                       double min_separation, double start_speed = 0.0);

// Course text format:
//   course N
//   start x y heading speed
//   marker x y            (N lines, visit order)
std::string write_course_text(const Course& course);
Course read_course_text(std::string_view text);
Course load_course_file(const std::string& path);
void save_course_file(const Course& course, const std::string& path);

// Sight sector of the target as seen from the helicopter: sector 0 is
// centered on the heading, indices grow counterclockwise. A coincident
// target reads as sector 0.
uint32_t sector_index(const HeliState& heli, Vec2 target, uint32_t sectors);

// One move: rotate or change speed (clamped), then always translate by
// speed along the heading.
HeliState step_physics(const HeliState& heli, uint32_t action, const HeliParams& params);

struct HeliTraceEntry {
    uint32_t step;   // 0-based, before the action
    uint32_t state;  // machine state before the transition
    uint32_t input;
    uint32_t action;
    double x, y, heading, speed;  // pose after the move
    uint32_t markers;             // visited count after capture checks
};

struct HeliResult {
    uint32_t markers_visited = 0;
    // Steps used at the last capture, else time_limit.
    uint32_t steps_used = 0;
    // Distance to the next unvisited marker at the last moment; 0 when all
    // markers were visited.
    double final_distance = 0.0;
};

// Runs the machine from state 0 and the course's start pose. Markers within
// capture_radius are consumed (checked before the first action and after
// every move). Input symbols stay below K; codes K..2^x-1 never occur.
HeliResult simulate_heli(const MealyMachine& machine, const Course& course,
                         const HeliParams& params,
                         std::vector<HeliTraceEntry>* trace = nullptr);

// More markers wins; ties fall to the smaller final distance.
std::strong_ordering compare_autopilots(const HeliResult& a, const HeliResult& b);

class HeliTask final : public Task {
public:
    HeliTask(Course course, HeliParams params)
        : course_(std::move(course)), params_(params) {}

    const char* name() const override { return "heli"; }
    uint32_t required_input_bits() const override {
        return input_bits_for_sectors(params_.sectors);
    }
    uint32_t required_output_bits() const override { return kOutputBits; }
    uint32_t required_action_count() const override { return kActionCount; }

    // feasible = all markers visited; a2 = steps used; deficit = markers
    // missed; final_distance feeds the objective's tie-break term.
    TaskEvaluation evaluate(const MealyMachine& machine) const override;

    const Course& course() const { return course_; }
    const HeliParams& params() const { return params_; }

private:
    Course course_;
    HeliParams params_;
};

}  // namespace fsmsynth::heli
