#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycomp/logic_eval.hpp"
#include "polycomp/rng.hpp"

namespace polycomp {

struct EaParams {
    int population_size = 64;
    int generations = 300;
    int elite_count = 1;
    double truncation_fraction = 0.25;
    std::optional<double> mutation_rate;  // default 1/L, resolved per genome length
    double crossover_rate = 0.5;
    std::uint64_t seed = 0;
    std::optional<double> target_fitness;  // early stop once best >= target
};

void validate(const EaParams& p);

struct GenerationStats {
    double best = 0.0;
    double mean = 0.0;
    double median = 0.0;
};

enum class Termination { generations, target, error };

struct EvolutionResult {
    Genome best_genome;
    double best_fitness = 0.0;
    GateReport best_report;
    std::vector<GenerationStats> history;
    std::int64_t evaluations = 0;  // logical truth-table evaluations (cache hits included)
    Termination terminated_by = Termination::generations;
};

// population_size genomes with designations copied from the template and each
// stiffness bit drawn uniformly from rng.
std::vector<Genome> init_population(const EaParams& params, const Genome& genome_template, SplitMix64& rng);

// Each bit flipped independently with probability rate; designations untouched.
Genome mutate(const Genome& genome, double rate, SplitMix64& rng);

// Uniform crossover; throws ConfigError on dimension mismatch.
Genome crossover(const Genome& a, const Genome& b, SplitMix64& rng);

// Generational loop: elitism + truncation selection + uniform crossover +
// per-bit mutation, fitness = maximin gate margin. A genome whose simulation
// blows up scores -inf and the run continues; the run aborts only if an
// entire generation is -inf. Deterministic given the seed regardless of the
// evaluation thread count (variation RNG is consumed sequentially).
EvolutionResult run_evolution(const Genome& genome_template, const SimConfig& config,
                              std::span<const GateTarget> targets, const EaParams& params,
                              int threads = 1);

}  // namespace polycomp
