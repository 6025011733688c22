#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "partalg/algebra_element.hpp"
#include "partalg/diagram.hpp"
#include "partalg/errors.hpp"

using namespace partalg;

TEST_CASE("parsing and canonical form") {
    Diagram d = Diagram::parse("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5);
    CHECK(d.blocks().size() == 4);
    CHECK(d.propagating_count() == 3);
    // Order of blocks and points inside blocks is canonical.
    Diagram same = Diagram::parse("5 -5 -2 | 4 | -1 2 | -4 3 1 -3", 5);
    CHECK(d == same);

    CHECK(Diagram::parse("1 -1 | 2 -2", 2) == Diagram::identity(2));
    CHECK_THROWS_AS(Diagram::parse("1 | 1 -1", 1), malformed_diagram);
    CHECK_THROWS_AS(Diagram::parse("1 -1", 2), malformed_diagram);    // missing points
    CHECK_THROWS_AS(Diagram::parse("1 -1 3 | 2 -2", 2), malformed_diagram);
}

TEST_CASE("propagating counts") {
    CHECK(Diagram::identity(4).propagating_count() == 4);
    Diagram dn = generator_diagram(GenKind::e, 4, 0, 4);  // strands 1..3
    CHECK(dn.propagating_count() == 3);
}

TEST_CASE("multiplication basics") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        Diagram id = Diagram::identity(n);
        for (int trial = 0; trial < 20; ++trial) {
            Diagram d = random_diagram(n, rng);
            auto prod = multiply(id, d);
            CHECK(prod.diagram == d);
            CHECK(prod.delta_power == 0);
        }
    }
    Diagram p12 = generator_diagram(GenKind::p2, 1, 2, 3);
    auto sq = multiply(p12, p12);
    CHECK(sq.diagram == p12);
    CHECK(sq.delta_power == 0);

    Diagram dn = generator_diagram(GenKind::e, 3, 0, 3);
    auto dsq = multiply(dn, dn);
    CHECK(dsq.diagram == dn);
    CHECK(dsq.delta_power == 1);

    CHECK_THROWS_AS(multiply(Diagram::identity(2), Diagram::identity(3)), size_mismatch);
}

TEST_CASE("a worked P_5 product") {
    Diagram x = Diagram::parse("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5);
    Diagram y = Diagram::parse("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5);
    auto prod = multiply(x, y);
    CHECK(prod.delta_power == 1);
    CHECK(prod.diagram == Diagram::parse("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5));
}

TEST_CASE("filtration: propagating count never increases") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            Diagram x = random_diagram(n, rng), y = random_diagram(n, rng);
            auto prod = multiply(x, y);
            CHECK(prod.diagram.propagating_count() <=
                  std::min(x.propagating_count(), y.propagating_count()));
        }
}

TEST_CASE("generators") {
    CHECK(generator_diagram(GenKind::s, 1, 2, 2) == Diagram::parse("1 -2 | 2 -1", 2));
    CHECK(generator_diagram(GenKind::p1, 1, 0, 2) == Diagram::parse("1 | -1 | 2 -2", 2));
    CHECK(module_action_generators(4).size() == 10);  // 3 + 3 + 4
    CHECK(module_action_generators(1).size() == 1);
}

TEST_CASE("symbolic algebra elements") {
    const int n = 4;
    AlgebraElement one(Diagram::identity(n));
    for (int i = 1; i < n; ++i) {
        auto s = generator(GenKind::s, i, i + 1, n);
        CHECK(multiply_elements(s, s) == one);
        auto p2 = generator(GenKind::p2, i, i + 1, n);
        CHECK(multiply_elements(p2, p2) == p2);
    }
    for (int i = 1; i <= n; ++i) {
        // p_i^2 = delta p_i; the normalized element p_i/delta is idempotent.
        auto p1 = generator(GenKind::p1, i, 0, n);
        CHECK(multiply_elements(p1, p1) == p1.scaled(DeltaPoly::monomial(1, 1)));
        auto q = p1.scaled(DeltaPoly::monomial(1, -1));
        CHECK(multiply_elements(q, q) == q);
    }
    auto e2 = generator(GenKind::e, 2, 0, n);
    CHECK(multiply_elements(e2, e2) == e2);

    // d_n d_n = delta * d_n symbolically.
    Diagram dn = generator_diagram(GenKind::e, n, 0, n);
    auto prod = multiply_elements(AlgebraElement(dn), AlgebraElement(dn));
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms().at(dn) == DeltaPoly::monomial(1, 1));

    // Bilinearity on random diagrams.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        AlgebraElement x(random_diagram(n, rng)), y(random_diagram(n, rng)),
            z(random_diagram(n, rng));
        CHECK(multiply_elements(x + y, z) == multiply_elements(x, z) + multiply_elements(y, z));
    }
}

TEST_CASE("e_n compresses to diagrams with n singletons") {
    const int n = 3;
    auto en = generator(GenKind::e, n, 0, n);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement x(random_diagram(n, rng));
        auto squeezed = multiply_elements(multiply_elements(en, x), en);
        for (const auto& [d, c] : squeezed.terms()) {
            bool top_single = false, bottom_single = false;
            for (const auto& blk : d.blocks()) {
                if (blk == std::vector<int>{n}) top_single = true;
                if (blk == std::vector<int>{-n}) bottom_single = true;
            }
            CHECK(top_single);
            CHECK(bottom_single);
        }
    }
}

TEST_CASE("associativity with symbolic delta") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            AlgebraElement x(random_diagram(n, rng)), y(random_diagram(n, rng)),
                z(random_diagram(n, rng));
            CHECK(multiply_elements(multiply_elements(x, y), z) ==
                  multiply_elements(x, multiply_elements(y, z)));
        }
}

TEST_CASE("Bell numbers count diagrams") {
    // Independent Bell triangle.
    std::vector<long> bell{1};
    std::vector<long> row{1};
    for (int i = 1; i <= 8; ++i) {
        std::vector<long> next{row.back()};
        for (long v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    CHECK(bell[4] == 15);
    CHECK(bell[6] == 203);
    CHECK(bell[8] == 4140);
}
