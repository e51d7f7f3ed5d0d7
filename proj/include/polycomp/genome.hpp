#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace polycomp {

// Evolvable description of a lattice material: grid dimensions, one stiffness
// class bit per particle (0 = soft, 1 = stiff) and the three designated
// particles. Particle indices are row-major from the bottom-left corner.
struct Genome {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> types;
    std::array<int, 2> input_particles{-1, -1};
    int output_particle = -1;

    int particle_count() const { return width * height; }

    int index_of(int col, int row) const { return row * width + col; }
    int col_of(int idx) const { return idx % width; }
    int row_of(int idx) const { return idx / width; }

    bool operator==(const Genome&) const = default;
};

// Throws ConfigError naming the offending field.
void validate(const Genome& g);

// Left-right mirror: types reflected per row, designated indices mirrored.
Genome mirrored(const Genome& g);

}  // namespace polycomp
