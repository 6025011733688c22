#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partalg/errors.hpp"

namespace partalg {

// Field contexts share one interface: an element type plus arithmetic taking
// the context by const reference. Matrices and modules are templated on them.

struct Rationals {
    using Elt = mpq_class;
    static constexpr bool is_finite = false;

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    Elt from_int(long v) const { return Elt(v); }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw error("division by zero");
        return Elt(1) / a;
    }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    size_t order() const { return 0; }
    Elt element_by_index(size_t) const { throw error("rationals are not enumerable"); }
    std::string str(const Elt& a) const { return a.get_str(); }
};

struct PrimeField {
    uint64_t p = 3;
    using Elt = uint64_t;
    static constexpr bool is_finite = true;

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p; }
    Elt from_int(long v) const {
        long r = v % static_cast<long>(p);
        return r < 0 ? r + p : r;
    }
    Elt add(Elt a, Elt b) const { return (a + b) % p; }
    Elt sub(Elt a, Elt b) const { return (a + p - b) % p; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt inv(Elt a) const;
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    size_t order() const { return p; }
    Elt element_by_index(size_t i) const { return i; }
    std::string str(Elt a) const { return std::to_string(a); }
};

// F_{p^2} = F_p[x]/(x^2 + c1 x + c0), elements a + b x.
struct QuadExtField {
    uint64_t p = 3;
    uint64_t c1 = 0;
    uint64_t c0 = 1;
    using Elt = std::array<uint64_t, 2>;
    static constexpr bool is_finite = true;

    // The lexicographically least (c1, c0) giving an irreducible monic
    // quadratic over F_p.
    static QuadExtField canonical(uint64_t p);

    Elt zero() const { return {0, 0}; }
    Elt one() const { return {1 % p, 0}; }
    Elt x() const { return {0, 1 % p}; }
    Elt from_int(long v) const {
        long r = v % static_cast<long>(p);
        return {static_cast<uint64_t>(r < 0 ? r + p : r), 0};
    }
    Elt add(const Elt& a, const Elt& b) const { return {(a[0] + b[0]) % p, (a[1] + b[1]) % p}; }
    Elt sub(const Elt& a, const Elt& b) const {
        return {(a[0] + p - b[0]) % p, (a[1] + p - b[1]) % p};
    }
    Elt mul(const Elt& a, const Elt& b) const {
        // (a0 + a1 x)(b0 + b1 x), x^2 = -c1 x - c0
        uint64_t t2 = (a[1] * b[1]) % p;
        uint64_t t1 = (a[0] * b[1] + a[1] * b[0]) % p;
        uint64_t t0 = (a[0] * b[0]) % p;
        uint64_t r1 = (t1 + (p - c1) * t2) % p;
        uint64_t r0 = (t0 + (p - c0) * t2) % p;
        return {r0, r1};
    }
    Elt neg(const Elt& a) const {
        return {a[0] == 0 ? 0 : p - a[0], a[1] == 0 ? 0 : p - a[1]};
    }
    Elt inv(const Elt& a) const;
    bool is_zero(const Elt& a) const { return a[0] == 0 && a[1] == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    size_t order() const { return p * p; }
    Elt element_by_index(size_t i) const { return {i % p, i / p}; }
    std::string str(const Elt& a) const;
};

// Runtime description of the coefficient field and delta, as chosen on the
// command line: characteristic 0 or p; delta an integer, the canonical F_{p^2}
// generator ("x"), or the non-integral semisimple regime ("ss", char 0 only).
struct FieldSpec {
    int characteristic = 0;         // 0 or an odd prime
    bool delta_is_generator = false;  // delta = x in F_{p^2}
    bool delta_nonintegral = false;   // char 0 "ss" regime
    long delta_int = 1;               // representative when integral

    // Throws on invalid combinations (p = 2, delta vanishing in the field...).
    void validate() const;
    bool modular() const { return characteristic != 0; }
    std::string delta_str() const;
};

}  // namespace partalg
