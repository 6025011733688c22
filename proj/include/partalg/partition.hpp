#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace partalg {

// A node (x,y) of a Young diagram; rows and columns are 1-based.
struct Node {
    int row = 1;
    int col = 1;
    friend bool operator==(const Node&, const Node&) = default;
};

// content(x,y) = y - x.
inline long content(const Node& nd) { return static_cast<long>(nd.col) - nd.row; }

// An integer partition: weakly decreasing positive parts, trailing zeros never
// stored. The empty partition is a first-class value of size 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text forms: "5,4" with the empty partition written "-".
    static Partition parse(const std::string& text);
    std::string str() const;

    long size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                   // 1-based, 0 beyond the last row
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // mu is contained in *this as Young diagrams.
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Dominance order with size: |a|<|b|, or equal sizes with prefix sums of a
// bounded by those of b.
bool dominance_leq(const Partition& a, const Partition& b);

// Listing order used everywhere for matrix labels: size ascending, then
// lexicographically descending within a size. Refines dominance with size.
bool canonical_label_less(const Partition& a, const Partition& b);

// false iff some part value occurs >= p times.
bool is_p_regular(const Partition& a, int p);

std::vector<Node> removable_nodes(const Partition& a);
std::vector<Node> addable_nodes(const Partition& a);
Partition remove_node(const Partition& a, const Node& nd);
Partition add_node(const Partition& a, const Node& nd);

// All partitions of m, canonically ordered.
std::vector<Partition> partitions_of(long m);

// Lambda_{<=n}, or Lambda*_{<=n} when p is given.
struct PartitionSet {
    long n = 0;
    std::optional<int> p;
    std::vector<Partition> members;
};

PartitionSet partitions_up_to(long n, std::optional<int> p = std::nullopt);

}  // namespace partalg
