#include "partalg/diagram_poset.hpp"

#include <algorithm>
#include <map>

#include "partalg/errors.hpp"

namespace partalg {

namespace {

// Set partitions of {1..n} as block lists.
void top_partitions_rec(int next, int n, std::vector<std::vector<int>>& cur,
                        std::vector<std::vector<std::vector<int>>>& out) {
    if (next > n) {
        out.push_back(cur);
        return;
    }
    // Index loop: the recursion below grows and shrinks cur.
    for (size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(next);
        top_partitions_rec(next + 1, n, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({next});
    top_partitions_rec(next + 1, n, cur, out);
    cur.pop_back();
}

}  // namespace

DiagramSetIT enumerate_IT(int n, int t) {
    if (t < 0 || t > n) throw error("enumerate_IT needs 0 <= t <= n");
    DiagramSetIT set;
    set.n = n;
    set.t = t;
    std::vector<std::vector<std::vector<int>>> tops;
    std::vector<std::vector<int>> cur;
    top_partitions_rec(1, n, cur, tops);

    for (const auto& top : tops) {
        const int k = static_cast<int>(top.size());
        if (k < t) continue;
        // Ordered choices of t distinct blocks to carry -1..-t.
        std::vector<int> choice(t);
        std::vector<char> used(k, 0);
        auto emit = [&] {
            std::vector<std::vector<int>> blocks = top;
            for (int i = 0; i < t; ++i) blocks[choice[i]].push_back(-(i + 1));
            for (int j = t + 1; j <= n; ++j) blocks.push_back({-j});
            set.members.emplace_back(n, std::move(blocks));
        };
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == t) {
                emit();
                return;
            }
            for (int b = 0; b < k; ++b) {
                if (used[b]) continue;
                used[b] = 1;
                choice[pos] = b;
                self(self, pos + 1);
                used[b] = 0;
            }
        };
        rec(rec, 0);
    }
    std::sort(set.members.begin(), set.members.end());
    return set;
}

bool refinement_leq(const Diagram& x, const Diagram& y) {
    if (x.n() != y.n()) throw incomparable_domain("refinement needs equal diagram sizes");
    // Map each point to its block index in y.
    std::map<int, int> block_of;
    for (size_t b = 0; b < y.blocks().size(); ++b)
        for (int pt : y.blocks()[b]) block_of[pt] = static_cast<int>(b);
    for (const auto& blk : x.blocks()) {
        int target = block_of.at(blk[0]);
        for (int pt : blk)
            if (block_of.at(pt) != target) return false;
    }
    return true;
}

namespace {

long mobius_in_set(const Diagram& x, const Diagram& y, const DiagramSetIT& set,
                   std::map<Diagram, long>& memo) {
    if (x == y) return 1;
    if (!refinement_leq(x, y)) return 0;
    // memo keyed by the upper element; x is fixed per traversal
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    long sum = 0;  // over all x <= z < y, the z = x term contributing 1
    for (const auto& z : set.members)
        if (!(z == y) && refinement_leq(x, z) && refinement_leq(z, y))
            sum += mobius_in_set(x, z, set, memo);
    long val = -sum;
    memo[y] = val;
    return val;
}

int count_propagating_structure(const Diagram& d, int n, int& t_out) {
    // t from the singleton-tail convention: barred t+1..n singletons.
    int t = d.propagating_count();
    for (int j = t + 1; j <= n; ++j) {
        bool single = false;
        for (const auto& blk : d.blocks())
            if (blk.size() == 1 && blk[0] == -j) single = true;
        if (!single) return -1;
    }
    t_out = t;
    return 0;
}

}  // namespace

long mobius(const Diagram& x, const Diagram& y) {
    if (x.n() != y.n()) throw incomparable_domain("mobius needs equal diagram sizes");
    int tx = 0, ty = 0;
    if (count_propagating_structure(x, x.n(), tx) != 0 ||
        count_propagating_structure(y, y.n(), ty) != 0 || tx != ty)
        throw error("mobius arguments must lie in one I(n,t)");
    auto set = enumerate_IT(x.n(), tx);
    std::map<Diagram, long> memo;
    return mobius_in_set(x, y, set, memo);
}

std::vector<Diagram> minimal_elements(int n, int t) {
    if (t < 0 || t > n) throw error("minimal_elements needs 0 <= t <= n");
    std::vector<Diagram> out;
    std::vector<int> choice(t);
    std::vector<char> used(n + 1, 0);
    auto emit = [&] {
        std::vector<std::vector<int>> blocks;
        std::vector<char> prop(n + 1, 0);
        for (int i = 0; i < t; ++i) {
            blocks.push_back({choice[i], -(i + 1)});
            prop[choice[i]] = 1;
        }
        for (int k = 1; k <= n; ++k)
            if (!prop[k]) blocks.push_back({k});
        for (int j = t + 1; j <= n; ++j) blocks.push_back({-j});
        out.emplace_back(n, std::move(blocks));
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == t) {
            emit();
            return;
        }
        for (int a = 1; a <= n; ++a) {
            if (used[a]) continue;
            used[a] = 1;
            choice[pos] = a;
            self(self, pos + 1);
            used[a] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AlgebraElement> psi_basis(int n, int t) {
    auto set = enumerate_IT(n, t);
    std::vector<AlgebraElement> out;
    for (const auto& y : minimal_elements(n, t)) {
        AlgebraElement psi(n);
        std::map<Diagram, long> memo;
        for (const auto& x : set.members) {
            long mu = mobius_in_set(y, x, set, memo);
            if (mu != 0) psi.add_term(x, DeltaPoly::constant(mu));
        }
        out.push_back(std::move(psi));
    }
    return out;
}

std::vector<Diagram> propagating_orbit_reps(int n, int t) {
    if (t < 0 || t > n) throw error("propagating_orbit_reps needs 0 <= t <= n");
    std::vector<Diagram> out;
    std::vector<std::vector<std::vector<int>>> tops;
    std::vector<std::vector<int>> cur;
    top_partitions_rec(1, n, cur, tops);
    for (const auto& top : tops) {
        const int k = static_cast<int>(top.size());
        if (k < t) continue;
        // Unordered t-subsets of blocks; attachment is forced by sorting on
        // the least northern point (blocks are already in that order).
        std::vector<int> idx(t);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == t) {
                std::vector<std::vector<int>> blocks = top;
                for (int i = 0; i < t; ++i) blocks[idx[i]].push_back(-(i + 1));
                for (int j = t + 1; j <= n; ++j) blocks.push_back({-j});
                out.emplace_back(n, std::move(blocks));
                return;
            }
            for (int b = start; b < k; ++b) {
                idx[pos] = b;
                self(self, pos + 1, b + 1);
            }
        };
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ITDecomposition decompose_IT(const Diagram& d, int t) {
    const int n = d.n();
    // Propagating block of each -i, ordered by least northern point.
    std::vector<std::vector<int>> prop_blocks(t);
    std::vector<std::vector<int>> other_blocks;
    for (const auto& blk : d.blocks()) {
        int attached = 0;
        std::vector<int> tops;
        for (int pt : blk) {
            if (pt > 0) tops.push_back(pt);
            if (pt < 0 && -pt <= t) attached = -pt;
        }
        if (attached) {
            if (tops.empty()) throw error("diagram is not in I(n,t)");
            prop_blocks[attached - 1] = tops;
        } else if (!tops.empty()) {
            other_blocks.push_back(tops);
        } else if (blk.size() != 1 || -blk[0] <= t) {
            throw error("diagram is not in I(n,t)");
        }
    }
    std::vector<int> order(t);
    for (int i = 0; i < t; ++i) {
        if (prop_blocks[i].empty()) throw error("diagram is not in I(n,t)");
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return prop_blocks[a][0] < prop_blocks[b][0]; });
    // order[j] = which barred point the j-th sorted block carries in d; the
    // representative carries -(j+1) there instead, so sigma(order[j]) = j+1.
    std::vector<int> sigma(t);
    for (int j = 0; j < t; ++j) sigma[order[j]] = j + 1;

    std::vector<std::vector<int>> blocks = other_blocks;
    for (int j = 0; j < t; ++j) {
        auto blk = prop_blocks[order[j]];
        blk.push_back(-(j + 1));
        blocks.push_back(std::move(blk));
    }
    for (int j = t + 1; j <= n; ++j) blocks.push_back({-j});
    return {Diagram(n, std::move(blocks)), std::move(sigma)};
}

}  // namespace partalg
