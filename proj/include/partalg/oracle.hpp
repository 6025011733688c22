#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "partalg/matrix_module.hpp"
#include "partalg/meataxe.hpp"
#include "partalg/partition.hpp"

namespace partalg {

// Rows labelled by Lambda_{<=n}, columns by the simple labels, integer
// multiplicities. Shared by the theorem builders and the oracle.
struct LabeledMatrix {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<long>> entries;

    long at(const Partition& r, const Partition& c) const;
    long& at(const Partition& r, const Partition& c);
    bool has_col(const Partition& c) const;
    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

LabeledMatrix labeled_identity(const std::vector<Partition>& rows,
                               const std::vector<Partition>& cols);
LabeledMatrix labeled_product(const LabeledMatrix& a, const LabeledMatrix& b);

// F is identified as the unique candidate whose cell module admits a nonzero
// homomorphism onto it (simple heads of cell modules are the simples).
template <class F>
Partition identify_factor(const F& f, const MatrixModule<F>& factor,
                          const std::vector<std::pair<Partition, const MatrixModule<F>*>>&
                              candidates,
                          Rng& rng) {
    std::vector<Partition> matches;
    for (const auto& [lam, cell] : candidates) {
        if (cell->dim < factor.dim) continue;
        if (hom_dim(f, *cell, factor, rng) > 0) matches.push_back(lam);
    }
    if (matches.size() != 1) {
        std::string msg = "factor of dimension " + std::to_string(factor.dim) + " matched " +
                          std::to_string(matches.size()) + " candidates";
        for (const auto& m : matches) msg += " " + m.str();
        throw identification_failed(msg);
    }
    return matches[0];
}

// Brute-force decomposition matrix: chop every standard module and identify
// each factor against candidate heads. `standard` builds the module for a
// label, `same_block` prunes identification candidates (block-theory prune),
// `simple_labels` are the column labels in canonical order.
template <class F>
LabeledMatrix oracle_decomposition(
    const F& f, const std::vector<Partition>& row_labels,
    const std::vector<Partition>& simple_labels,
    const std::function<MatrixModule<F>(const Partition&)>& standard,
    const std::function<bool(const Partition&, const Partition&)>& same_block, uint64_t seed,
    long bound) {
    LabeledMatrix out;
    out.rows = row_labels;
    out.cols = simple_labels;
    out.entries.assign(row_labels.size(), std::vector<long>(simple_labels.size(), 0));

    std::map<Partition, MatrixModule<F>> cells;
    for (const auto& lam : row_labels) cells.emplace(lam, standard(lam));

    for (size_t ri = 0; ri < row_labels.size(); ++ri) {
        const Partition& mu = row_labels[ri];
        const auto& m = cells.at(mu);
        if (m.dim > bound)
            throw desk_scale_exceeded("cell module dimension " + std::to_string(m.dim) +
                                      " exceeds the oracle bound " + std::to_string(bound));
        // Per-task deterministic seeding so results are reproducible
        // regardless of evaluation order.
        Rng rng(seed ^ (0x9e3779b97f4a7c15ull * (ri + 1)));
        auto factors = composition_factors(f, m, rng);
        long dim_check = 0;
        for (const auto& fac : factors) {
            dim_check += fac.dim;
            std::vector<std::pair<Partition, const MatrixModule<F>*>> candidates;
            for (const auto& lam : simple_labels)
                if (same_block(mu, lam)) candidates.push_back({lam, &cells.at(lam)});
            Partition lam = identify_factor(f, fac, candidates, rng);
            out.at(mu, lam) += 1;
        }
        if (dim_check != m.dim)
            throw error("composition factor dimensions do not sum to dim");
        if (out.has_col(mu) && out.at(mu, mu) != 1)
            throw error("cellular diagonal entry is not 1 at " + mu.str());
    }
    return out;
}

}  // namespace partalg
