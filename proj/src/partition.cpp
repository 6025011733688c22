#include "partalg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition token: " + tok);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("row index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    long pa = 0, pb = 0;
    int rows = std::max(a.length(), b.length());
    for (int i = 1; i <= rows; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

bool canonical_label_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();  // lexicographically descending within a size
}

bool is_p_regular(const Partition& a, int p) {
    int run = 0;
    int prev = -1;
    for (int v : a.parts()) {
        run = (v == prev) ? run + 1 : 1;
        prev = v;
        if (run >= p) return false;
    }
    return true;
}

std::vector<Node> removable_nodes(const Partition& a) {
    std::vector<Node> out;
    for (int i = 1; i <= a.length(); ++i)
        if (a.part(i) > a.part(i + 1)) out.push_back({i, a.part(i)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& a) {
    std::vector<Node> out;
    out.push_back({1, a.part(1) + 1});
    for (int i = 2; i <= a.length(); ++i)
        if (a.part(i - 1) > a.part(i)) out.push_back({i, a.part(i) + 1});
    if (a.length() > 0) out.push_back({a.length() + 1, 1});
    return out;
}

Partition remove_node(const Partition& a, const Node& nd) {
    std::vector<int> parts = a.parts();
    if (nd.row < 1 || nd.row > a.length() || a.part(nd.row) != nd.col)
        throw std::invalid_argument("not a removable node");
    parts[nd.row - 1] -= 1;
    return Partition(std::move(parts));
}

Partition add_node(const Partition& a, const Node& nd) {
    std::vector<int> parts = a.parts();
    if (nd.row == a.length() + 1) {
        parts.push_back(0);
    } else if (nd.row < 1 || nd.row > a.length()) {
        throw std::invalid_argument("not an addable node");
    }
    if (parts[nd.row - 1] + 1 != nd.col) throw std::invalid_argument("not an addable node");
    parts[nd.row - 1] += 1;
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(long remaining, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min<long>(max_part, remaining); k >= 1; --k) {
        cur.push_back(k);
        enumerate_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    enumerate_rec(m, static_cast<int>(m), cur, out);
    std::sort(out.begin(), out.end(), canonical_label_less);
    return out;
}

PartitionSet partitions_up_to(long n, std::optional<int> p) {
    PartitionSet set;
    set.n = n;
    set.p = p;
    for (long m = 0; m <= n; ++m) {
        for (auto& lam : partitions_of(m)) {
            if (p && !is_p_regular(lam, *p)) continue;
            set.members.push_back(std::move(lam));
        }
    }
    return set;
}

}  // namespace partalg
