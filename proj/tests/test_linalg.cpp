#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "partalg/fields.hpp"
#include "partalg/linalg.hpp"

using namespace partalg;

namespace {

template <class F>
Mat<F> random_matrix(const F& f, size_t r, size_t c, std::mt19937_64& rng) {
    Mat<F> m = Mat<F>::zero(f, r, c);
    for (auto& v : m.data) {
        if constexpr (F::is_finite)
            v = f.element_by_index(rng() % f.order());
        else
            v = f.from_int(static_cast<long>(rng() % 7) - 3);
    }
    return m;
}

template <class F>
void check_field_axioms(const F& f) {
    std::vector<typename F::Elt> elems;
    if constexpr (F::is_finite) {
        for (size_t i = 0; i < f.order(); ++i) elems.push_back(f.element_by_index(i));
    } else {
        for (long v = -6; v <= 6; ++v) elems.push_back(f.from_int(v));
    }
    for (const auto& a : elems) {
        CHECK(f.eq(f.add(a, f.zero()), a));
        CHECK(f.eq(f.mul(a, f.one()), a));
        CHECK(f.is_zero(f.add(a, f.neg(a))));
        if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
        for (const auto& b : elems) {
            CHECK(f.eq(f.add(a, b), f.add(b, a)));
            CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
            for (const auto& c : elems)
                CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
        }
    }
}

}  // namespace

TEST_CASE("field axioms") {
    check_field_axioms(Rationals{});
    check_field_axioms(PrimeField{3});
    check_field_axioms(PrimeField{5});
    check_field_axioms(QuadExtField::canonical(3));
    check_field_axioms(QuadExtField::canonical(5));
}

TEST_CASE("canonical quadratic extensions") {
    auto f9 = QuadExtField::canonical(3);
    CHECK(f9.c1 == 0);
    CHECK(f9.c0 == 1);  // x^2 + 1 over F_3
    auto f25 = QuadExtField::canonical(5);
    CHECK(f25.c1 == 0);
    CHECK(f25.c0 == 2);  // x^2 + 2 over F_5
    // The generator is not in the prime field and squares to -c0.
    CHECK(f9.mul(f9.x(), f9.x()) == f9.from_int(-1));
    CHECK(f25.mul(f25.x(), f25.x()) == f25.from_int(-2));
}

TEST_CASE("rref, rank, nullspace over F_p") {
    PrimeField f{5};
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        Mat<PrimeField> m = random_matrix(f, r, c, rng);
        Mat<PrimeField> copy = m;
        size_t rank = mat_rank(f, m);
        Mat<PrimeField> null = nullspace(f, m);
        CHECK(rank + null.rows == c);
        // Each nullspace row really is annihilated.
        for (size_t k = 0; k < null.rows; ++k) {
            std::vector<PrimeField::Elt> v(c);
            for (size_t j = 0; j < c; ++j) v[j] = null.at(k, j);
            auto image = mat_vec(f, copy, v);
            for (const auto& e : image) CHECK(f.is_zero(e));
        }
    }
}

TEST_CASE("rational elimination is exact") {
    Rationals f;
    std::mt19937_64 rng(4);
    Mat<Rationals> m = random_matrix(f, 6, 6, rng);
    Mat<Rationals> copy = m;
    size_t rank = mat_rank(f, m);
    auto null = nullspace(f, copy);
    CHECK(rank + null.rows == 6);
}

TEST_CASE("echelon space") {
    PrimeField f{3};
    EchelonSpace<PrimeField> space(f, 4);
    CHECK(space.add({1, 2, 0, 1}));
    CHECK(space.add({0, 1, 1, 0}));
    CHECK_FALSE(space.add({1, 0, 1, 1}));  // 2*first + ... dependent check
    CHECK(space.dim_space() == 2);

    // expand() returns exact coordinates.
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        EchelonSpace<PrimeField> sp(f, 6);
        std::vector<std::vector<PrimeField::Elt>> added;
        for (int k = 0; k < 4; ++k) {
            std::vector<PrimeField::Elt> v(6);
            for (auto& e : v) e = rng() % 3;
            if (sp.add(v)) added.push_back(v);
        }
        for (size_t r = 0; r < sp.dim_space(); ++r) {
            auto coords = sp.expand(sp.rows()[r]);
            for (size_t k = 0; k < coords.size(); ++k)
                CHECK(f.eq(coords[k], k == r ? f.one() : f.zero()));
        }
    }
}

TEST_CASE("dependent vector detection") {
    PrimeField f{3};
    EchelonSpace<PrimeField> space(f, 3);
    space.add({1, 1, 0});
    space.add({0, 1, 1});
    // 1*(1,1,0) + 2*(0,1,1) = (1, 0, 2) mod 3
    CHECK_FALSE(space.add({1, 0, 2}));
    CHECK(space.contains({1, 0, 2}));
    CHECK_FALSE(space.contains({0, 0, 1}));
}
