#pragma once

#include <array>
#include <string>
#include <vector>

#include "polycomp/substrate.hpp"

namespace polycomp {

enum class Gate { AND, OR, XOR, NAND, NOR, XNOR };

// Truth table rows in the fixed order (0,0), (0,1), (1,0), (1,1).
std::array<int, 4> truth_table(Gate gate);
std::string gate_name(Gate gate);
Gate gate_from_name(const std::string& name);  // case-insensitive, throws ConfigError

struct GateTarget {
    Gate gate = Gate::AND;
    int frequency_slot = 1;  // 1 -> f1, 2 -> f2
};

// At most one target per slot, slots in {1,2}.
void validate(std::span<const GateTarget> targets);

struct MarginResult {
    double margin = 0.0;
    double threshold = 0.0;
    bool requires_bias = false;  // target wants ON at the undriven (0,0) row
};

struct GateResult {
    GateTarget target;
    std::array<double, 4> amplitudes{};  // output spectral amplitude per row
    double margin = 0.0;
    double threshold = 0.0;
    std::array<int, 4> decoded{};
    bool valid = false;
    bool requires_bias = false;
};

struct GateReport {
    std::vector<GateResult> gates;
    double fitness = 0.0;
};

// Normalized separation between ON and OFF rows:
//   (min over ON rows - max over OFF rows) / (max over all rows + 1e-12)
// with the undriven row (0,0) excluded from the OFF set (its amplitude is
// structurally zero). A target with ON at (0,0) cannot be realized by a
// drive-silent material: margin -1 and the requires-bias flag, no exception.
MarginResult gate_margin(const std::array<double, 4>& amplitudes, const std::array<int, 4>& table);

// bit = amplitude >= threshold; valid iff margin > 0 and no bias required.
std::array<int, 4> decode_bits(const std::array<double, 4>& amplitudes, double threshold);

// Maximin over per-gate margins: both gates must separate for positive fitness.
double polycomputing_fitness(const GateReport& report);

// Runs simulate for all four input-bit pairs and reads the output particle's
// speed spectrum at twice each slot frequency (the speed magnitude of a
// response at f lives at 2f). threads > 1 runs the four rows concurrently.
GateReport evaluate_truth_table(const Genome& genome, const SimConfig& config,
                                std::span<const GateTarget> targets, int threads = 1);

// Readout frequency for a slot: 2 * (slot == 1 ? f1 : f2).
double readout_frequency(const ExcitationSpec& spec, int slot);

}  // namespace polycomp
