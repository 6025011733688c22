#pragma once

#include <string>
#include <vector>

#include "partalg/partition.hpp"

namespace partalg {

// beta(lambda, b)_i = lambda_i - i + b for i = 1..b; strictly decreasing.
struct BetaSequence {
    std::vector<long> values;
    long beads = 0;
};

// The delta-marked abacus: b bead positions (entries 1..b of beta_delta) plus
// a marker on runner (delta - |lambda| + b) mod p.
struct MarkedAbacus {
    int p = 3;
    long beads = 0;
    std::vector<long> positions;
    int marker = 0;
};

// Beads per runner: Gamma (sums to b) or Gamma_delta (sums to b+1).
struct RunnerCounts {
    std::vector<long> counts;
    friend bool operator==(const RunnerCounts&, const RunnerCounts&) = default;
};

BetaSequence beta_sequence(const Partition& a, long b);
Partition partition_of_beta(const BetaSequence& s);

RunnerCounts gamma(const Partition& a, long b, int p);
Partition p_core(const Partition& a, int p);

std::vector<long> beta_delta(const Partition& a, long b, long delta);
MarkedAbacus marked_abacus(const Partition& a, long b, long delta, int p);
RunnerCounts gamma_delta(const Partition& a, long b, long delta, int p);

std::string render_abacus(const MarkedAbacus& m);

}  // namespace partalg
