#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "polycomp/trace.hpp"

namespace polycomp {

// Two-tone drive description plus readout window geometry. The window must
// hold an integer number of cycles of every frequency that gets read out, so
// no spectral leakage correction is ever needed.
struct ExcitationSpec {
    double f1 = 0.25;        // cycles per time unit, gate slot 1
    double f2 = 0.65;        // gate slot 2
    double amplitude = 0.025;  // drive force amplitude (default 0.05 * radius)
    double window = 200.0;   // readout duration T
    double transient = 60.0; // discarded ring-up duration
};

// Throws ConfigError; checks positivity, f1 != f2, integer cycle counts in the
// window and the harmonic-collision guard f2 not in {2 f1, 3 f1, f1/2}.
void validate(const ExcitationSpec& spec);

struct SpectralReading {
    double frequency = 0.0;
    double amplitude = 0.0;  // displacement/speed amplitude estimate, >= 0
    double phase = 0.0;      // radians in (-pi, pi]
};

// Force on the two input particles at time t: bit b activates both tones on
// that input, A * (sin(2 pi f1 t) + sin(2 pi f2 t)).
std::pair<double, double> drive_signal(std::pair<int, int> bits, const ExcitationSpec& spec, double t);

// Single-bin DFT at `freq` via the Goertzel recurrence. Requires freq * len * dt
// to be an integer cycle count in [1, len/2). Amplitude is scaled by 2/len so a
// pure tone of amplitude A reads A; phase matches the DFT convention
// X = sum x[n] exp(-2 pi i f n dt).
SpectralReading goertzel(std::span<const double> series, double dt, double freq);

// Complex single-bin coefficient (2/len scaling), shared by goertzel and the
// linearity tests.
std::complex<double> goertzel_coefficient(std::span<const double> series, double dt, double freq);

// Goertzel over the speed magnitude series of one recorded particle, one
// reading per frequency, order preserved.
std::vector<SpectralReading> spectrum(const Trace& trace, int particle, std::span<const double> freqs);

}  // namespace polycomp
