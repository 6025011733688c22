#pragma once

#include <optional>
#include <vector>

#include "partalg/partition.hpp"

namespace partalg {

// hat(lambda) = (-|lambda|, lambda_1, ..., lambda_n) in the ambient weight
// coordinates.
std::vector<long> hat(const Partition& lam, int n);

// rho(delta) = (delta, -1, -2, ..., -n).
std::vector<long> rho(long delta, int n);

// mu -> lambda by a strip of nodes in one row whose last node has content
// delta - |mu|.
bool is_delta_pair(const Partition& mu, const Partition& lam, long delta);

// Characteristic-0 orbit test: hat+rho multisets agree.
bool same_block_char0(const Partition& a, const Partition& b, long delta, int n);

// Characteristic-p orbit test via Gamma_delta at the common bead count b = n;
// equivalently beta_delta multisets mod p agree.
bool same_block_charp(const Partition& a, const Partition& b, long delta_rep, int p, int n);

struct BlockDecomposition {
    int n = 0;
    int characteristic = 0;  // 0 for K
    std::optional<long> delta;  // absent: non-integral char-0 regime
    std::vector<std::vector<Partition>> classes;
};

// Blocks of P_n^K(delta); with delta_integral == false every class is a
// singleton (the algebra is semisimple).
BlockDecomposition blocks_char0(int n, long delta, bool delta_integral = true);
BlockDecomposition blocks_charp(int n, int p, long delta_rep);

// Verifies the class is a chain of consecutive delta-pairs, the i-th pair
// differing in row i+1, and returns it sorted by size. Throws
// chain_shape_violation otherwise.
std::vector<Partition> martin_chain(const std::vector<Partition>& cls, long delta);

// Non-semisimple exactly when delta is integral with 0 <= delta < 2n-1.
bool is_semisimple_char0(int n, long delta, bool delta_integral = true);

}  // namespace partalg
