#pragma once

#include <cmath>
#include <vector>

namespace polycomp {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

// Fixed-step recording of selected particles over the readout window.
// Displacements are relative to the rest positions; one displacement and one
// velocity sample per simulated step per recorded particle.
struct Trace {
    double dt = 0.0;
    std::vector<int> recorded_ids;
    // indexed [recorded particle][step]
    std::vector<std::vector<Vec2>> displacements;
    std::vector<std::vector<Vec2>> velocities;

    std::size_t steps() const { return displacements.empty() ? 0 : displacements.front().size(); }

    // Position of `particle` within recorded_ids; throws LookupError if absent.
    std::size_t slot_of(int particle) const;

    // |v| per step for one recorded particle.
    std::vector<double> speed_series(int particle) const;
};

}  // namespace polycomp
