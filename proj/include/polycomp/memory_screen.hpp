#pragma once

#include <cstdint>
#include <vector>

#include "polycomp/boolnet.hpp"

namespace polycomp {

// Stimulation protocol: clamp a node to 1 for stim_steps to let the network
// settle under stimulus, then record the response node over obs_window steps
// with the clamp still held, then release. Response classes use an ON-fraction
// hysteresis band: responds >= on_fraction, silent <= off_fraction.
struct Protocol {
    int stim_steps = 8;
    int obs_window = 16;
    double on_fraction = 0.75;
    double off_fraction = 0.25;
    int relax_steps = 4096;
};

void validate(const Protocol& p);

struct Triplet {
    int ucs = 0;
    int cs = 0;
    int r = 0;

    bool operator==(const Triplet&) const = default;
};

enum class ResponseClass { responds, silent, ambiguous };
enum class Classification { associative, none, skipped };

const char* to_string(ResponseClass c);
const char* to_string(Classification c);

struct TripletOutcome {
    Triplet triplet;
    ResponseClass r_pre = ResponseClass::silent;   // CS alone, before training
    ResponseClass r_ucs = ResponseClass::silent;   // UCS alone
    ResponseClass r_post = ResponseClass::silent;  // CS alone, after UCS+CS pairing
    Classification classification = Classification::none;
};

struct ScreenReport {
    Protocol protocol;
    std::vector<TripletOutcome> outcomes;  // lexicographic (ucs, cs, r) order
    std::vector<Triplet> hits;             // associative triplets
    int associative = 0;
    int none = 0;
    int skipped = 0;
};

struct ControlSummary {
    int original_hits = 0;
    std::vector<int> control_hits;
    double mean = 0.0;
    int min = 0;
    int max = 0;
    std::uint64_t seed = 0;
};

// Synchronous updates with cycle detection from init_state; returns the cycle
// once a state repeats. Throws ConfigError if relax_steps is exhausted first.
std::vector<std::uint32_t> find_attractor(const BooleanNetwork& net, std::uint32_t init_state,
                                          int relax_steps);

// Four-phase Pavlovian probe of one (UCS, CS, R) assignment, starting every
// reset from the attractor of the all-zero state.
TripletOutcome run_protocol(const BooleanNetwork& net, const Triplet& triplet, const Protocol& protocol);

// All n(n-1)(n-2) ordered triplets, deterministic order and outcomes.
ScreenReport screen_network(const BooleanNetwork& net, const Protocol& protocol);

// Degree-preserving randomized controls: per node, inputs redrawn uniformly
// without duplicates and the table resampled uniformly. Deterministic per seed.
ControlSummary random_controls(const BooleanNetwork& net, const Protocol& protocol, int count,
                               std::uint64_t seed);

}  // namespace polycomp
