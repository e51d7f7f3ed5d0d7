#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polycomp/genome.hpp"
#include "polycomp/signal.hpp"
#include "polycomp/trace.hpp"

namespace polycomp {

struct MaterialParams {
    double k_soft = 1.0;    // contact stiffness, force per overlap^1.5
    double k_stiff = 10.0;
    double k_tether = 0.1;  // linear spring to the rest position
    double damping = 0.05;  // viscous coefficient per particle
    double mass = 1.0;
    double radius = 0.5;
    double precompression = 0.0;  // fractional rest overlap
};

void validate(const MaterialParams& p);

struct Contact {
    std::int32_t a = 0;
    std::int32_t b = 0;
};

// Particle state on the fixed 4-connected grid. The contact list never changes
// during a run.
struct LatticeState {
    std::vector<Vec2> positions;
    std::vector<Vec2> velocities;
    std::vector<Vec2> rest_positions;
    std::vector<Contact> contacts;
    double time = 0.0;

    std::size_t particle_count() const { return positions.size(); }
};

struct SimConfig {
    MaterialParams material;
    ExcitationSpec excitation;
    double dt = 0.01;

    int window_steps() const;
    int transient_steps() const;
};

// Full validation: component invariants plus integer step counts for the
// window and transient at this dt, and readout frequencies below Nyquist.
void validate(const SimConfig& config);

// Particles on a square grid with spacing 2 * radius * (1 - precompression),
// zero velocities, contacts between all horizontally/vertically adjacent pairs.
LatticeState build_lattice(const Genome& genome, const MaterialParams& params);

// Harmonic-mean combination of the two particles' contact stiffnesses.
double pair_stiffness(std::uint8_t type_i, std::uint8_t type_j, const MaterialParams& params);

// One-sided Hertzian law: k * overlap^1.5 for positive overlap, else 0.
double contact_force(double overlap, double k);

// One velocity-Verlet step under contact + tether + viscous damping +
// external forces. Throws NumericalError if a non-finite value appears.
LatticeState step(const LatticeState& state, std::span<const Vec2> external_forces, double dt,
                  const Genome& genome, const MaterialParams& params);

// Drives the two input particles with the two-tone signal for
// transient + window and returns the recorded window (inputs and output
// particle). Pure function of its arguments; bit-identical across repeated
// calls in one process. With precompression > 0 a heavily damped relaxation
// phase (damping x10, 10x transient steps) runs before the drive starts.
Trace simulate(const Genome& genome, const SimConfig& config, std::pair<int, int> input_bits);

// Kinetic + tether + Hertzian contact potential ((2/5) k overlap^2.5).
double total_energy(const LatticeState& state, const Genome& genome, const MaterialParams& params);

}  // namespace polycomp
