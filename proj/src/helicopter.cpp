#include "fsmsynth/helicopter.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fsmsynth/rng.hpp"

namespace fsmsynth::heli {

namespace {

constexpr uint32_t kPlacementTries = 10000;  // per marker

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

double distance(Vec2 a, Vec2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

uint32_t input_bits_for_sectors(uint32_t sectors) {
    if (sectors < 2) {
        throw std::invalid_argument("sector count must be >= 2");
    }
    return std::bit_width(sectors - 1);
}

Course generate_course(uint64_t seed, uint32_t marker_count, Bounds bounds,
                       double min_separation, double start_speed) {
    if (marker_count == 0) {
        throw std::invalid_argument("generate_course: need at least one marker");
    }
    Rng rng(seed);
    Course course;
    course.markers.reserve(marker_count);
    while (course.markers.size() < marker_count) {
        bool placed = false;
        for (uint32_t attempt = 0; attempt < kPlacementTries; ++attempt) {
            const Vec2 candidate{rng.real() * bounds.width, rng.real() * bounds.height};
            bool clear = true;
            for (const Vec2& m : course.markers) {
                if (distance(candidate, m) < min_separation) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                course.markers.push_back(candidate);
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw std::runtime_error(
                "generate_course: could not place markers with the requested "
                "separation; bounds too tight");
        }
    }
    course.start.position = {bounds.width / 2.0, bounds.height / 2.0};
    course.start.heading = 0.0;
    course.start.speed = start_speed;
    return course;
}

std::string write_course_text(const Course& course) {
    std::string out = "course " + std::to_string(course.markers.size()) + "\n";
    out += "start ";
    append_double(out, course.start.position.x);
    out += ' ';
    append_double(out, course.start.position.y);
    out += ' ';
    append_double(out, course.start.heading);
    out += ' ';
    append_double(out, course.start.speed);
    out += '\n';
    for (const Vec2& m : course.markers) {
        out += "marker ";
        append_double(out, m.x);
        out += ' ';
        append_double(out, m.y);
        out += '\n';
    }
    return out;
}

Course read_course_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    size_t count = 0;
    if (!(in >> tag >> count) || tag != "course") {
        throw std::runtime_error("course text: missing 'course N' header");
    }
    if (count == 0) {
        throw std::runtime_error("course text: need at least one marker");
    }
    Course course;
    if (!(in >> tag) || tag != "start") {
        throw std::runtime_error("course text: missing start line");
    }
    if (!(in >> course.start.position.x >> course.start.position.y >>
          course.start.heading >> course.start.speed)) {
        throw std::runtime_error("course text: malformed start line");
    }
    course.markers.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        Vec2 m;
        if (!(in >> tag >> m.x >> m.y) || tag != "marker") {
            throw std::runtime_error("course text: expected " + std::to_string(count) +
                                     " marker lines");
        }
        course.markers.push_back(m);
    }
    if (in >> tag) {
        throw std::runtime_error("course text: trailing data");
    }
    return course;
}

Course load_course_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open course file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_course_text(buf.str());
}

void save_course_file(const Course& course, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write course file: " + path);
    }
    out << write_course_text(course);
}

uint32_t sector_index(const HeliState& heli, Vec2 target, uint32_t sectors) {
    if (sectors < 2) {
        throw std::invalid_argument("sector count must be >= 2");
    }
    const double dx = target.x - heli.position.x;
    const double dy = target.y - heli.position.y;
    if (dx == 0.0 && dy == 0.0) return 0;
    const double bearing = wrap_angle(std::atan2(dy, dx) - heli.heading);
    const double width = kTwoPi / sectors;
    // Shift by half a sector so the heading sits mid-sector 0.
    const double shifted = std::fmod(bearing + width / 2.0, kTwoPi);
    const uint32_t index = static_cast<uint32_t>(shifted / width);
    return index >= sectors ? 0 : index;
}

HeliState step_physics(const HeliState& heli, uint32_t action, const HeliParams& params) {
    HeliState next = heli;
    switch (action) {
        case kRotateLeft:
            next.heading = wrap_angle(next.heading + params.turn_angle);
            break;
        case kRotateRight:
            next.heading = wrap_angle(next.heading - params.turn_angle);
            break;
        case kAccelerate:
            next.speed = std::min(next.speed + params.velocity_step, params.v_max);
            break;
        case kDecelerate:
            next.speed = std::max(next.speed - params.velocity_step, params.v_min);
            break;
        default:
            throw std::out_of_range("helicopter action code out of range");
    }
    // The helicopter is always flying: translation happens every move.
    next.position.x += next.speed * std::cos(next.heading);
    next.position.y += next.speed * std::sin(next.heading);
    return next;
}

HeliResult simulate_heli(const MealyMachine& machine, const Course& course,
                         const HeliParams& params, std::vector<HeliTraceEntry>* trace) {
    if (machine.spec.input_bits != input_bits_for_sectors(params.sectors) ||
        machine.spec.action_count != kActionCount) {
        throw std::invalid_argument(
            "simulate_heli: machine shape does not match sector count / action set");
    }

    const uint32_t total = static_cast<uint32_t>(course.markers.size());
    HeliState heli = course.start;
    uint32_t state = MealyMachine::kInitialState;
    uint32_t visited = 0;
    uint32_t steps = 0;
    uint32_t last_capture_step = 0;

    // Capture check precedes the first action.
    while (visited < total &&
           distance(heli.position, course.markers[visited]) <= params.capture_radius) {
        ++visited;
        last_capture_step = steps;
    }

    while (visited < total && steps < params.time_limit) {
        const uint32_t input = sector_index(heli, course.markers[visited], params.sectors);
        const StepResult sr = step(machine, state, input);
        const uint32_t state_before = state;
        state = sr.next_state;
        heli = step_physics(heli, sr.action, params);
        ++steps;
        while (visited < total &&
               distance(heli.position, course.markers[visited]) <= params.capture_radius) {
            ++visited;
            last_capture_step = steps;
        }
        if (trace) {
            trace->push_back({steps - 1, state_before, input, sr.action, heli.position.x,
                              heli.position.y, heli.heading, heli.speed, visited});
        }
    }

    HeliResult result;
    result.markers_visited = visited;
    result.steps_used = visited == total ? last_capture_step : params.time_limit;
    result.final_distance =
        visited == total ? 0.0 : distance(heli.position, course.markers[visited]);
    return result;
}

std::strong_ordering compare_autopilots(const HeliResult& a, const HeliResult& b) {
    if (a.markers_visited != b.markers_visited) {
        // More markers is better, so it orders first.
        return a.markers_visited > b.markers_visited ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    }
    if (a.final_distance != b.final_distance) {
        return a.final_distance < b.final_distance ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

TaskEvaluation HeliTask::evaluate(const MealyMachine& machine) const {
    const HeliResult result = simulate_heli(machine, course_, params_);
    TaskEvaluation eval;
    eval.feasible = result.markers_visited == course_.markers.size();
    eval.iterations = result.steps_used;
    eval.deficit = static_cast<double>(course_.markers.size() - result.markers_visited);
    eval.raw = static_cast<double>(result.markers_visited);
    eval.final_distance = result.final_distance;
    return eval;
}

}  // namespace fsmsynth::heli
