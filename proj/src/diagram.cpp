#include "partalg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "partalg/errors.hpp"

namespace partalg {

namespace {

// Point order inside blocks and for block leaders: 1..n then -1..-n.
int point_rank(int pt, int n) { return pt > 0 ? pt - 1 : n + (-pt) - 1; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram::Diagram(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    if (n <= 0) throw malformed_diagram("diagram size must be positive");
    std::vector<char> seen(2 * n, 0);
    for (auto& blk : blocks) {
        if (blk.empty()) throw malformed_diagram("empty block");
        for (int pt : blk) {
            if (pt == 0 || pt > n || pt < -n)
                throw malformed_diagram("point out of range: " + std::to_string(pt));
            int r = point_rank(pt, n);
            if (seen[r]) throw malformed_diagram("duplicate point: " + std::to_string(pt));
            seen[r] = 1;
        }
        std::sort(blk.begin(), blk.end(),
                  [n](int a, int b) { return point_rank(a, n) < point_rank(b, n); });
    }
    for (int r = 0; r < 2 * n; ++r)
        if (!seen[r])
            throw malformed_diagram("missing point: " +
                                    std::to_string(r < n ? r + 1 : -(r - n + 1)));
    std::sort(blocks.begin(), blocks.end(), [n](const auto& a, const auto& b) {
        return point_rank(a[0], n) < point_rank(b[0], n);
    });
    blocks_ = std::move(blocks);
    for (const auto& blk : blocks_) {
        for (int pt : blk) key_.push_back(pt);
        key_.push_back(0);  // block separator
    }
}

Diagram Diagram::identity(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i, -i});
    return Diagram(n, std::move(blocks));
}

Diagram Diagram::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string blk_text;
    while (std::getline(ss, blk_text, '|')) {
        std::vector<int> blk;
        std::stringstream bs(blk_text);
        int pt;
        while (bs >> pt) blk.push_back(pt);
        if (!bs.eof()) throw malformed_diagram("bad diagram token in: " + blk_text);
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    return Diagram(n, std::move(blocks));
}

int Diagram::propagating_count() const {
    int count = 0;
    for (const auto& blk : blocks_) {
        bool top = false, bottom = false;
        for (int pt : blk) (pt > 0 ? top : bottom) = true;
        if (top && bottom) ++count;
    }
    return count;
}

Diagram Diagram::flip() const {
    std::vector<std::vector<int>> blocks = blocks_;
    for (auto& blk : blocks)
        for (int& pt : blk) pt = -pt;
    return Diagram(n_, std::move(blocks));
}

std::string Diagram::str() const {
    std::string out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += " | ";
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out;
}

DiagramProduct multiply(const Diagram& x, const Diagram& y) {
    if (x.n() != y.n())
        throw size_mismatch("diagram sizes differ: " + std::to_string(x.n()) + " vs " +
                            std::to_string(y.n()));
    const int n = x.n();
    // Points 0..n-1: result top (top of x); n..2n-1: identified middle row
    // (bottom of x = top of y); 2n..3n-1: result bottom (bottom of y).
    UnionFind uf(3 * n);
    auto x_index = [n](int pt) { return pt > 0 ? pt - 1 : n + (-pt) - 1; };
    auto y_index = [n](int pt) { return pt > 0 ? n + pt - 1 : 2 * n + (-pt) - 1; };
    for (const auto& blk : x.blocks())
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(x_index(blk[0]), x_index(blk[i]));
    for (const auto& blk : y.blocks())
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(y_index(blk[0]), y_index(blk[i]));

    std::vector<char> touches_outside(3 * n, 0);
    for (int i = 0; i < n; ++i) {
        touches_outside[uf.find(i)] = 1;
        touches_outside[uf.find(2 * n + i)] = 1;
    }
    int interior = 0;
    for (int i = n; i < 2 * n; ++i)
        if (uf.find(i) == i && !touches_outside[i]) ++interior;

    std::vector<std::vector<int>> groups(3 * n);
    for (int i = 0; i < n; ++i) {
        groups[uf.find(i)].push_back(i + 1);
        groups[uf.find(2 * n + i)].push_back(-(i + 1));
    }
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return {Diagram(n, std::move(blocks)), interior};
}

}  // namespace partalg
