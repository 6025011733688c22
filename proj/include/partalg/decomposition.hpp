#pragma once

#include <cstdint>
#include <optional>

#include "partalg/blocks.hpp"
#include "partalg/fields.hpp"
#include "partalg/oracle.hpp"
#include "partalg/partition.hpp"

namespace partalg {

inline constexpr uint64_t kDefaultSeed = 12345;
inline constexpr long kDefaultOracleBound = 200;

// Martin's characteristic-0 matrix: identity on singleton classes; inside a
// chain, each cell module has its own label and the next chain member once.
LabeledMatrix decomp_char0(int n, long delta, bool delta_integral = true);

// Decomposition matrix of kS_m: identity below p, Peel's closed form at
// m = p, the module-theoretic oracle above p.
LabeledMatrix sym_group_decomp(int m, int p, uint64_t seed = kDefaultSeed,
                               long bound = kDefaultOracleBound);

// Block-diagonal stack of D(kS_m) for m = n..0, rows Lambda_{<=n}, columns
// Lambda*_{<=n}.
LabeledMatrix sym_group_block_stack(int n, int p, uint64_t seed = kDefaultSeed,
                                    long bound = kDefaultOracleBound);

struct DecompRequest {
    int n = 1;
    FieldSpec field;  // characteristic + delta regime
    uint64_t seed = kDefaultSeed;
    long bound = kDefaultOracleBound;
};

// The theorem-driven characteristic-p matrix. Supported: delta outside F_p
// (block stack of symmetric groups); n < p with delta in F_p (unique
// delta+rp-pair per row); n = p with delta = p-1 (Peel's principal block plus
// the characteristic-0 matrix elsewhere). Throws unsupported_case otherwise.
LabeledMatrix decomp_charp_theorem(const DecompRequest& req);

// Brute force: chop every cell module and identify the factors.
LabeledMatrix decomposition_matrix_oracle(int n, const FieldSpec& spec,
                                          uint64_t seed = kDefaultSeed,
                                          long bound = kDefaultOracleBound);

// D(P_p^k(p-1)) = D(P_p^K(p-1)) * S, verified by explicit construction.
bool product_check_remark(int p, uint64_t seed = kDefaultSeed,
                          long bound = kDefaultOracleBound);

// The closing counterexample: at n = 4, p = 3, delta = 1, the oracle matrix
// contains the forced entries but matches neither char-0 product.
bool counterexample_check(uint64_t seed = kDefaultSeed, long bound = kDefaultOracleBound);

// Rank of the canonical bilinear form on S^lambda over the residue field of
// the spec (p-regularity required in characteristic p) or over the rationals.
long specht_gram_rank(const Partition& lam, const FieldSpec& spec);

// Annihilator check: the joint kernel of all p_{i,j} on the cell module
// equals the span of psi (x) s vectors. Optionally reports the kernel dim.
bool psi_annihilator_check(const Partition& mu, int n, const FieldSpec& spec,
                           long* kernel_dim = nullptr);

// Multiset of identified composition factor labels of the cell module
// Delta_mu(n) over the spec's field, canonically ordered.
std::vector<Partition> cell_module_factors(const Partition& mu, int n, const FieldSpec& spec,
                                           uint64_t seed = kDefaultSeed);

// Same for the Specht module S^mu over F_p.
std::vector<Partition> specht_module_factors(const Partition& mu, int p,
                                             uint64_t seed = kDefaultSeed);

// Validates the cellular zero pattern: entry(mu, lam) != 0 forces mu = lam or
// lam strictly above mu in dominance-with-size; diagonal entries are 1.
void validate_cellular_shape(const LabeledMatrix& m);

}  // namespace partalg
