#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polycomp {

// Synchronously updated Boolean network. Node i's next value is
// table[sum_j state[inputs[j]] << j] (inputs[0] is the least significant bit
// of the table index). Indegree-0 nodes are constants (table of length 1).
struct BoolNode {
    std::string name;
    std::vector<int> inputs;
    std::vector<std::uint8_t> table;
};

struct BooleanNetwork {
    std::vector<BoolNode> nodes;
    int node_count() const { return static_cast<int>(nodes.size()); }
};

// Ranges, table lengths (2^indegree), node count <= 31 so states fit a word.
void validate(const BooleanNetwork& net);

// Synchronous successor of state s (bit i of s = value of node i).
std::uint32_t next_state(const BooleanNetwork& net, std::uint32_t s);

// Parses the JSON array-of-nodes format; throws ConfigError with the node
// name/index in the message.
BooleanNetwork parse_network(const std::string& text);

// Row-stochastic state-transition matrix over 2^n states, state index
// little-endian in the node values.
class Tpm {
public:
    Tpm() = default;
    Tpm(int n_states, std::vector<double> rows);  // validates shape, rows sum to 1 +- 1e-12

    static Tpm deterministic(int n_states, const std::vector<std::uint32_t>& successor);

    int n_states() const { return n_states_; }
    double at(int row, int col) const { return p_[static_cast<std::size_t>(row) * n_states_ + col]; }
    const std::vector<double>& data() const { return p_; }

private:
    int n_states_ = 0;
    std::vector<double> p_;
};

// One-hot TPM of the synchronous dynamics; requires n <= 20.
Tpm build_tpm(const BooleanNetwork& net);

struct EiReport {
    double ei = 0.0;             // bits
    double determinism = 0.0;    // 1 - mean row entropy / log2(N)
    double degeneracy = 0.0;     // 1 - H(mean row) / log2(N)
    double effectiveness = 0.0;  // determinism - degeneracy
    int size = 0;                // n_states
};

// Effective information under the uniform intervention distribution:
// EI = H(mean row) - mean row entropy.
EiReport effective_information(const Tpm& tpm);

// Surjective micro-state -> macro-state mapping onto 0..m-1.
struct Partition {
    std::vector<int> mapping;

    int macro_count() const;
    static Partition identity(int n_states);
};

void validate(const Partition& partition, int n_states);

// Macro row = uniform average of member micro rows, columns summed per group.
Tpm coarse_grain(const Tpm& tpm, const Partition& partition);

// EI(macro) - EI(micro), in bits.
double causal_emergence(const Tpm& micro, const Partition& partition);

enum class SearchMode { automatic, exhaustive, greedy };

struct SearchOptions {
    SearchMode mode = SearchMode::automatic;  // exhaustive iff n_states <= 10
    std::uint64_t budget = 10'000'000;        // max CE evaluations
};

struct SearchResult {
    Partition best;
    double ce = 0.0;
    std::uint64_t evaluations = 0;
    bool truncated = false;  // budget ran out; best-so-far returned
    SearchMode mode_used = SearchMode::exhaustive;
};

// Exhaustive mode enumerates every set partition (restricted growth strings,
// lexicographic) and is capped at 10 micro states; greedy mode merges the pair
// of macro states that most increases CE until no merge improves. Ties keep
// the lexicographically smallest mapping.
SearchResult search_partitions(const Tpm& tpm, const SearchOptions& options = {});

}  // namespace polycomp
