#include "partalg/blocks.hpp"

#include <algorithm>
#include <functional>

#include "partalg/abacus.hpp"
#include "partalg/errors.hpp"

namespace partalg {

std::vector<long> hat(const Partition& lam, int n) {
    if (lam.length() > n) throw label_too_large("partition has more than n rows");
    if (lam.size() > n) throw label_too_large("|lambda| > n");
    std::vector<long> out(n + 1, 0);
    out[0] = -lam.size();
    for (int i = 1; i <= n; ++i) out[i] = lam.part(i);
    return out;
}

std::vector<long> rho(long delta, int n) {
    std::vector<long> out(n + 1);
    out[0] = delta;
    for (int i = 1; i <= n; ++i) out[i] = -i;
    return out;
}

bool is_delta_pair(const Partition& mu, const Partition& lam, long delta) {
    if (!lam.contains(mu) || lam == mu) return false;
    int diff_row = 0;
    int rows = std::max(mu.length(), lam.length());
    for (int i = 1; i <= rows; ++i) {
        if (lam.part(i) != mu.part(i)) {
            if (diff_row != 0) return false;  // more than one row differs
            diff_row = i;
        }
    }
    // Last node of the added strip is (diff_row, lam_{diff_row}).
    return static_cast<long>(lam.part(diff_row)) - diff_row == delta - mu.size();
}

namespace {

std::vector<long> sorted_orbit_vector(const Partition& lam, long delta, int n) {
    auto h = hat(lam, n);
    auto r = rho(delta, n);
    for (int i = 0; i <= n; ++i) h[i] += r[i];
    std::sort(h.begin(), h.end());
    return h;
}

}  // namespace

bool same_block_char0(const Partition& a, const Partition& b, long delta, int n) {
    return sorted_orbit_vector(a, delta, n) == sorted_orbit_vector(b, delta, n);
}

bool same_block_charp(const Partition& a, const Partition& b, long delta_rep, int p, int n) {
    long b0 = std::max(n, 1);
    return gamma_delta(a, b0, delta_rep, p) == gamma_delta(b, b0, delta_rep, p);
}

namespace {

BlockDecomposition group_by(int n, int characteristic, std::optional<long> delta,
                            const std::vector<Partition>& labels,
                            const std::function<bool(const Partition&, const Partition&)>& same) {
    BlockDecomposition out;
    out.n = n;
    out.characteristic = characteristic;
    out.delta = delta;
    std::vector<char> used(labels.size(), 0);
    for (size_t i = 0; i < labels.size(); ++i) {
        if (used[i]) continue;
        std::vector<Partition> cls{labels[i]};
        used[i] = 1;
        for (size_t j = i + 1; j < labels.size(); ++j) {
            if (!used[j] && same(labels[i], labels[j])) {
                cls.push_back(labels[j]);
                used[j] = 1;
            }
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

BlockDecomposition blocks_char0(int n, long delta, bool delta_integral) {
    auto labels = partitions_up_to(n).members;
    if (!delta_integral) {
        BlockDecomposition out;
        out.n = n;
        out.characteristic = 0;
        for (const auto& lam : labels) out.classes.push_back({lam});
        return out;
    }
    auto out = group_by(n, 0, delta, labels, [&](const Partition& a, const Partition& b) {
        return same_block_char0(a, b, delta, n);
    });
    for (const auto& cls : out.classes) martin_chain(cls, delta);  // shape assertion
    return out;
}

BlockDecomposition blocks_charp(int n, int p, long delta_rep) {
    auto labels = partitions_up_to(n).members;
    return group_by(n, p, delta_rep, labels, [&](const Partition& a, const Partition& b) {
        return same_block_charp(a, b, delta_rep, p, n);
    });
}

std::vector<Partition> martin_chain(const std::vector<Partition>& cls, long delta) {
    std::vector<Partition> chain = cls;
    std::sort(chain.begin(), chain.end(), canonical_label_less);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i].size() == chain[i + 1].size())
            throw chain_shape_violation("two chain members of equal size: " + chain[i].str() +
                                        ", " + chain[i + 1].str());
        if (!is_delta_pair(chain[i], chain[i + 1], delta))
            throw chain_shape_violation("consecutive members are not a delta-pair: " +
                                        chain[i].str() + " -> " + chain[i + 1].str());
        // The i-th link must add its strip in row i+1.
        int diff_row = 0;
        for (int r = 1; r <= chain[i + 1].length(); ++r)
            if (chain[i].part(r) != chain[i + 1].part(r)) {
                diff_row = r;
                break;
            }
        if (diff_row != static_cast<int>(i) + 1)
            throw chain_shape_violation("link " + std::to_string(i) + " differs in row " +
                                        std::to_string(diff_row));
    }
    return chain;
}

bool is_semisimple_char0(int n, long delta, bool delta_integral) {
    if (!delta_integral) return true;
    return !(0 <= delta && delta < 2L * n - 1);
}

}  // namespace partalg
