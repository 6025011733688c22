#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "partalg/diagram.hpp"

namespace partalg {

// Integer Laurent polynomial in the parameter delta.
class DeltaPoly {
public:
    DeltaPoly() = default;
    static DeltaPoly constant(long long c) { return monomial(c, 0); }
    static DeltaPoly monomial(long long c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    DeltaPoly& operator+=(const DeltaPoly& other);
    friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
    friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
    DeltaPoly operator-() const;

    friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

    std::string str() const;

private:
    std::map<int, long long> coeffs_;  // exponent -> coefficient, no zeros stored
};

// A formal linear combination of diagrams with DeltaPoly coefficients.
// Multiplication stays exact and field-free; fields evaluate delta later.
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n) {}
    AlgebraElement(const Diagram& d, DeltaPoly c = DeltaPoly::constant(1)) : n_(d.n()) {
        add_term(d, c);
    }

    int n() const { return n_; }
    const std::map<Diagram, DeltaPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Diagram& d, const DeltaPoly& c);
    AlgebraElement& operator+=(const AlgebraElement& other);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    AlgebraElement scaled(const DeltaPoly& c) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Diagram, DeltaPoly> terms_;
};

AlgebraElement multiply_elements(const AlgebraElement& a, const AlgebraElement& b);

enum class GenKind { s, p2, p1, e, id };

// Named elements of P_n(delta). For kind e the coefficient is delta^-(n-i+1).
AlgebraElement generator(GenKind kind, int i, int j, int n);

// The diagram underlying s_{i,j} / p_{i,j} / p_i / e_i (no coefficient).
Diagram generator_diagram(GenKind kind, int i, int j, int n);

// Fixed global generator list used for module actions:
// s_{1,2}..s_{n-1,n}, p_{1,2}..p_{n-1,n}, p_1..p_n.
std::vector<Diagram> module_action_generators(int n);

}  // namespace partalg
