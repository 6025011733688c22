#pragma once

#include <compare>
#include <string>
#include <vector>

namespace partalg {

// A set-partition of {1..n, -1..-n} in canonical form: points inside a block
// sorted with positives first (each ascending by absolute value), blocks
// sorted by their least point. Barred points are encoded as negatives.
class Diagram {
public:
    Diagram(int n, std::vector<std::vector<int>> blocks);

    static Diagram identity(int n);
    // Blocks separated by '|', points as signed integers, e.g. "1 -2 | 2 -1".
    static Diagram parse(const std::string& text, int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int propagating_count() const;
    Diagram flip() const;  // the * involution: i <-> -i

    std::string str() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.key_ <=> b.key_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> key_;  // flattened canonical form used for ordering
};

struct DiagramProduct {
    Diagram diagram;
    int delta_power = 0;  // count of removed interior components
};

// Concatenation product: x on top of y; x*y = delta^t * result.
DiagramProduct multiply(const Diagram& x, const Diagram& y);

// Draws a uniform-ish random set-partition diagram (random merges).
template <typename Rng>
Diagram random_diagram(int n, Rng& rng) {
    // Chinese-restaurant style block assignment over the 2n points.
    std::vector<std::vector<int>> blocks;
    auto points = [&] {
        std::vector<int> pts;
        for (int i = 1; i <= n; ++i) pts.push_back(i);
        for (int i = 1; i <= n; ++i) pts.push_back(-i);
        return pts;
    }();
    for (int pt : points) {
        auto k = rng() % (blocks.size() + 1);
        if (k == blocks.size())
            blocks.push_back({pt});
        else
            blocks[k].push_back(pt);
    }
    return Diagram(n, std::move(blocks));
}

}  // namespace partalg
