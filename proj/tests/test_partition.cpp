#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partalg/partition.hpp"

using namespace partalg;

namespace {

// Independent oracle: partition counting by Euler's pentagonal recurrence.
long partition_count(int n) {
    static std::vector<long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            long g1 = m - k * (3 * k - 1) / 2;
            long g2 = m - k * (3 * k + 1) / 2;
            if (g1 < 0 && g2 < 0) break;
            long term = 0;
            if (g1 >= 0) term += memo[g1];
            if (g2 >= 0) term += memo[g2];
            total += (k % 2 == 1) ? term : -term;
        }
        memo.push_back(total);
    }
    return memo[n];
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Partition::parse("5,4").parts() == std::vector<int>{5, 4});
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("5,4").str() == "5,4");
    CHECK(Partition{}.str() == "-");
    CHECK_THROWS(Partition::parse("1,2"));  // increasing
    CHECK(Partition::parse("5,4,0,0") == Partition::parse("5,4"));  // padding normalizes
    CHECK_THROWS(Partition::parse("1,0,1"));
}

TEST_CASE("dominance order with size") {
    CHECK(dominance_leq(Partition::parse("1"), Partition::parse("2,1")));
    CHECK(dominance_leq(Partition::parse("2,1"), Partition::parse("3")));
    CHECK_FALSE(dominance_leq(Partition::parse("3"), Partition::parse("2,1")));

    // Partial-order axioms on all pairs in Lambda_{<=6}.
    auto labels = partitions_up_to(6).members;
    for (const auto& a : labels) CHECK(dominance_leq(a, a));
    for (const auto& a : labels)
        for (const auto& b : labels) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            for (const auto& c : labels)
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(is_p_regular(Partition::parse("1,1,1"), 3));
    CHECK(is_p_regular(Partition::parse("2,1"), 3));
    CHECK(is_p_regular(Partition::parse("5,5,3,2,1,1"), 3));
    CHECK(is_p_regular(Partition{}, 3));
}

TEST_CASE("removable and addable nodes") {
    Partition lam = Partition::parse("5,5,3,2,1,1");
    CHECK(removable_nodes(lam) ==
          std::vector<Node>{{2, 5}, {3, 3}, {4, 2}, {6, 1}});
    CHECK(addable_nodes(lam) ==
          std::vector<Node>{{1, 6}, {3, 4}, {4, 3}, {5, 2}, {7, 1}});
    CHECK(removable_nodes(Partition{}).empty());
    CHECK(addable_nodes(Partition{}) == std::vector<Node>{{1, 1}});
}

TEST_CASE("node counts and removal validity") {
    for (const auto& a : partitions_up_to(6).members) {
        auto rem = removable_nodes(a);
        auto add = addable_nodes(a);
        // distinct part values
        std::set<int> values(a.parts().begin(), a.parts().end());
        CHECK(rem.size() == values.size());
        CHECK(add.size() == values.size() + 1);
        for (const auto& nd : rem) {
            Partition smaller = remove_node(a, nd);
            CHECK(smaller.size() == a.size() - 1);
        }
        for (const auto& nd : add) {
            Partition bigger = add_node(a, nd);
            CHECK(bigger.size() == a.size() + 1);
        }
    }
}

TEST_CASE("content") {
    CHECK(content(Node{1, 1}) == 0);
    CHECK(content(Node{3, 1}) == -2);
    CHECK(content(Node{1, 4}) == 3);
}

TEST_CASE("partition set enumeration") {
    auto s2 = partitions_up_to(2);
    CHECK(s2.members == std::vector<Partition>{Partition{}, Partition::parse("1"),
                                               Partition::parse("2"), Partition::parse("1,1")});
    auto s3 = partitions_up_to(3, 3);
    CHECK(s3.members ==
          std::vector<Partition>{Partition{}, Partition::parse("1"), Partition::parse("2"),
                                 Partition::parse("1,1"), Partition::parse("3"),
                                 Partition::parse("2,1")});
    CHECK(partitions_up_to(0).members == std::vector<Partition>{Partition{}});

    // |Lambda_{<=n}| against the pentagonal-recurrence oracle.
    for (int n = 0; n <= 8; ++n) {
        long expected = 0;
        for (int m = 0; m <= n; ++m) expected += partition_count(m);
        CHECK(static_cast<long>(partitions_up_to(n).members.size()) == expected);
    }
    // frozen values p(0..8)
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(8) == 22);
}

TEST_CASE("canonical label order: size ascending, dominance descending within") {
    auto labels = partitions_up_to(6).members;
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        CHECK(canonical_label_less(labels[i], labels[i + 1]));
    for (const auto& a : labels)
        for (const auto& b : labels) {
            if (a == b) continue;
            if (a.size() < b.size()) CHECK(canonical_label_less(a, b));
            // within one size, the more dominant label is listed first
            if (a.size() == b.size() && dominance_leq(a, b))
                CHECK(canonical_label_less(b, a));
        }
}
