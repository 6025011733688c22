#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "partalg/abacus.hpp"
#include "partalg/blocks.hpp"
#include "partalg/errors.hpp"

using namespace partalg;

namespace {

std::set<std::vector<int>> class_set(const BlockDecomposition& b) {
    std::set<std::vector<int>> out;
    for (const auto& cls : b.classes) {
        std::vector<int> key;
        for (const auto& p : cls) {
            for (int v : p.parts()) key.push_back(v);
            key.push_back(-1);
        }
        out.insert(key);
    }
    return out;
}

std::vector<Partition> parse_all(const std::vector<std::string>& texts) {
    std::vector<Partition> out;
    for (const auto& t : texts) out.push_back(Partition::parse(t));
    return out;
}

}  // namespace

TEST_CASE("hat and rho") {
    CHECK(hat(Partition::parse("2,1"), 4) == std::vector<long>{-3, 2, 1, 0, 0});
    CHECK(rho(1, 4) == std::vector<long>{1, -1, -2, -3, -4});
    CHECK(hat(Partition{}, 3) == std::vector<long>{0, 0, 0, 0});
    CHECK_THROWS_AS(hat(Partition::parse("3"), 2), label_too_large);
}

TEST_CASE("delta pairs") {
    CHECK(is_delta_pair(Partition::parse("4,1,1"), Partition::parse("4,3,1"), 7));
    CHECK(is_delta_pair(Partition{}, Partition::parse("3"), 2));
    CHECK(is_delta_pair(Partition{}, Partition::parse("5"), 4));
    CHECK_FALSE(is_delta_pair(Partition::parse("2,1"), Partition::parse("2,1"), 5));
    CHECK_FALSE(is_delta_pair(Partition::parse("2,1"), Partition::parse("3,2"), 5));
    // differs in two rows
    CHECK_FALSE(is_delta_pair(Partition::parse("1"), Partition::parse("2,1"), 2));
    // no pair can exist for negative delta
    for (const auto& mu : partitions_up_to(4).members)
        for (const auto& lam : partitions_up_to(4).members)
            for (long delta = -5; delta < 0; ++delta)
                CHECK_FALSE(is_delta_pair(mu, lam, delta));
}

TEST_CASE("characteristic zero blocks") {
    CHECK(same_block_char0(Partition::parse("1"), Partition::parse("4"), 4, 4));
    CHECK(same_block_char0(Partition::parse("2,1"), Partition::parse("2,1,1"), 1, 4));
    CHECK_FALSE(same_block_char0(Partition::parse("1"), Partition::parse("4"), 1, 4));

    auto b = blocks_char0(4, 1);
    auto classes = class_set(b);
    // The chain through (2,1) is the full Martin chain from the empty
    // partition: {} -> (2) -> (2,1) -> (2,1,1), rows 1, 2, 3.
    CHECK(classes.count({-1, 2, -1, 2, 1, -1, 2, 1, 1, -1}));
    CHECK(classes.count({1, -1}));  // (1) singleton
    CHECK(classes.count({4, -1}));  // (4) singleton

    auto b4 = blocks_char0(4, 4);
    CHECK(class_set(b4).count({1, -1, 4, -1}));  // {(1),(4)}
}

TEST_CASE("non-integral delta gives singleton blocks") {
    auto b = blocks_char0(4, 0, false);
    for (const auto& cls : b.classes) CHECK(cls.size() == 1);
    CHECK_FALSE(b.delta.has_value());
}

TEST_CASE("martin chains have the theorem shape") {
    for (int n = 1; n <= 6; ++n)
        for (long delta = -2; delta <= 10; ++delta) {
            auto b = blocks_char0(n, delta);  // asserts internally
            for (const auto& cls : b.classes) {
                auto chain = martin_chain(cls, delta);
                std::set<long> sizes;
                for (const auto& lam : chain) sizes.insert(lam.size());
                CHECK(sizes.size() == chain.size());  // distinct sizes
            }
        }
    CHECK_THROWS_AS(
        martin_chain(parse_all({"1", "4"}), 1), chain_shape_violation);
}

TEST_CASE("characteristic p blocks") {
    CHECK(same_block_charp(Partition::parse("1"), Partition::parse("4"), 1, 3, 4));
    for (const auto& a : partitions_up_to(5).members)
        CHECK(same_block_charp(a, a, 2, 3, 5));

    // All empty-p-core partitions in Lambda_{<=p} fall in the principal
    // block at delta = p-1.
    for (int p : {3, 5})
        for (int m = 0; m <= p - 1; ++m) {
            std::vector<int> parts{p - m};
            for (int i = 0; i < m; ++i) parts.push_back(1);
            CHECK(same_block_charp(Partition{}, Partition(parts), p - 1, p, p));
        }

    auto b = blocks_charp(3, 3, 2);
    auto classes = class_set(b);
    CHECK(classes.size() == 3);
    CHECK(classes.count({-1, 3, -1, 2, 1, -1, 1, 1, 1, -1}));  // {{},(3),(2,1),(1^3)}
    CHECK(classes.count({1, -1, 2, -1}));                      // {(1),(2)}
    CHECK(classes.count({1, 1, -1}));                          // {(1,1)}

    auto b41 = blocks_charp(4, 3, 1);
    bool found = false;
    for (const auto& cls : b41.classes) {
        bool has1 = false, has4 = false, has22 = false;
        for (const auto& lam : cls) {
            if (lam == Partition::parse("1")) has1 = true;
            if (lam == Partition::parse("4")) has4 = true;
            if (lam == Partition::parse("2,2")) has22 = true;
        }
        if (has1 && has4 && has22) found = true;
    }
    CHECK(found);
}

TEST_CASE("mod-p coarsening refines characteristic zero blocks") {
    for (int n = 2; n <= 5; ++n)
        for (int p : {3, 5})
            for (long r = 0; r <= 1; ++r)
                for (long delta = 0; delta < p; ++delta) {
                    auto char0 = blocks_char0(n, delta + r * p);
                    for (const auto& cls : char0.classes)
                        for (size_t i = 1; i < cls.size(); ++i)
                            CHECK(same_block_charp(cls[0], cls[i], delta, p, n));
                }
}

TEST_CASE("blocks at n=p, delta=p-1 restricted below p match characteristic 0") {
    for (int p : {3, 5}) {
        auto charp = blocks_charp(p, p, p - 1);
        auto char0 = blocks_char0(p, p - 1);
        auto labels = partitions_up_to(p - 1).members;  // sizes < p
        for (const auto& a : labels)
            for (const auto& b : labels)
                CHECK(same_block_char0(a, b, p - 1, p) ==
                      same_block_charp(a, b, p - 1, p, p));
    }
}

TEST_CASE("semisimplicity in characteristic zero") {
    CHECK_FALSE(is_semisimple_char0(4, 1));
    CHECK(is_semisimple_char0(4, -2));
    CHECK(is_semisimple_char0(3, 7));
    CHECK_FALSE(is_semisimple_char0(3, 0));
    CHECK(is_semisimple_char0(3, 5, false));  // non-integral flag wins
}

TEST_CASE("same-size members force equal blocks data") {
    // In characteristic 0 with integral delta, two distinct partitions of one
    // size never share a block.
    for (int n = 1; n <= 6; ++n)
        for (long delta = -2; delta <= 10; ++delta) {
            auto labels = partitions_up_to(n).members;
            for (const auto& a : labels)
                for (const auto& b : labels)
                    if (!(a == b) && a.size() == b.size())
                        CHECK_FALSE(same_block_char0(a, b, delta, n));
        }
    // Lemma "sizes": at n=p, delta=p-1, classes with non-empty p-core have
    // pairwise distinct sizes.
    for (int p : {3, 5}) {
        auto b = blocks_charp(p, p, p - 1);
        for (const auto& cls : b.classes) {
            bool principal = false;
            for (const auto& lam : cls)
                if (p_core(lam, p).empty()) principal = true;
            if (principal) continue;
            std::set<long> sizes;
            for (const auto& lam : cls) sizes.insert(lam.size());
            CHECK(sizes.size() == cls.size());
        }
    }
}
