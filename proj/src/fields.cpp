#include "partalg/fields.hpp"

namespace partalg {

namespace {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::Elt PrimeField::inv(Elt a) const {
    if (a == 0) throw error("division by zero in F_p");
    return pow_mod(a, p - 2, p);
}

QuadExtField QuadExtField::canonical(uint64_t p) {
    for (uint64_t c1 = 0; c1 < p; ++c1) {
        for (uint64_t c0 = 0; c0 < p; ++c0) {
            // x^2 + c1 x + c0 irreducible iff it has no root in F_p.
            bool has_root = false;
            for (uint64_t r = 0; r < p && !has_root; ++r)
                if ((r * r + c1 * r + c0) % p == 0) has_root = true;
            if (!has_root) return QuadExtField{p, c1, c0};
        }
    }
    throw error("no irreducible quadratic found (p must be prime)");
}

QuadExtField::Elt QuadExtField::inv(const Elt& a) const {
    if (is_zero(a)) throw error("division by zero in F_{p^2}");
    // Multiplicative order is p^2 - 1; a^{-1} = a^{p^2 - 2}.
    Elt result = one();
    Elt base = a;
    uint64_t exp = p * p - 2;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::string QuadExtField::str(const Elt& a) const {
    if (a[1] == 0) return std::to_string(a[0]);
    std::string out;
    if (a[0] != 0) out += std::to_string(a[0]) + "+";
    if (a[1] != 1) out += std::to_string(a[1]) + "*";
    out += "x";
    return out;
}

void FieldSpec::validate() const {
    if (characteristic != 0) {
        if (characteristic == 2 || !is_prime(characteristic))
            throw error("characteristic must be an odd prime, got " +
                        std::to_string(characteristic));
        if (delta_nonintegral)
            throw error("non-integral delta only makes sense in characteristic 0");
        if (!delta_is_generator && delta_int % characteristic == 0)
            throw delta_must_be_nonzero(
                "delta must be nonzero in the residue field (standing assumption)");
    } else {
        if (delta_is_generator) throw error("delta token 'x' needs a prime p");
        if (!delta_nonintegral && delta_int == 0)
            throw delta_must_be_nonzero("delta must be nonzero (standing assumption)");
    }
}

std::string FieldSpec::delta_str() const {
    if (delta_is_generator) return "x";
    if (delta_nonintegral) return "ss";
    return std::to_string(delta_int);
}

}  // namespace partalg
