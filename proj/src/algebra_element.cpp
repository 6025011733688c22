#include "partalg/algebra_element.hpp"

#include "partalg/errors.hpp"

namespace partalg {

DeltaPoly DeltaPoly::monomial(long long c, int exponent) {
    DeltaPoly p;
    if (c != 0) p.coeffs_[exponent] = c;
    return p;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
    for (const auto& [e, c] : other.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
    DeltaPoly out;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) out += DeltaPoly::monomial(ca * cb, ea + eb);
    return out;
}

DeltaPoly DeltaPoly::operator-() const {
    DeltaPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

std::string DeltaPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) out += c >= 0 ? " + " : " - ";
        long long mag = (!first && c < 0) ? -c : c;
        first = false;
        if (e == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "d";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

void AlgebraElement::add_term(const Diagram& d, const DeltaPoly& c) {
    if (d.n() != n_) throw size_mismatch("term size differs from element size");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (other.n_ != n_) throw size_mismatch("element sizes differ");
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const DeltaPoly& c) const {
    AlgebraElement out(n_);
    for (const auto& [d, co] : terms_) out.add_term(d, co * c);
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
        if (!out.empty()) out += "  +  ";
        out += "(" + c.str() + ") * [" + d.str() + "]";
    }
    return out;
}

AlgebraElement multiply_elements(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw size_mismatch("element sizes differ");
    AlgebraElement out(a.n());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            auto prod = multiply(da, db);
            out.add_term(prod.diagram, ca * cb * DeltaPoly::monomial(1, prod.delta_power));
        }
    }
    return out;
}

Diagram generator_diagram(GenKind kind, int i, int j, int n) {
    auto check = [n](int idx) {
        if (idx < 1 || idx > n) throw error("generator index out of range");
    };
    std::vector<std::vector<int>> blocks;
    switch (kind) {
        case GenKind::id:
            return Diagram::identity(n);
        case GenKind::s:
            check(i), check(j);
            if (i == j) throw error("s_{i,j} needs distinct indices");
            for (int k = 1; k <= n; ++k) {
                if (k == i)
                    blocks.push_back({i, -j});
                else if (k == j)
                    blocks.push_back({j, -i});
                else
                    blocks.push_back({k, -k});
            }
            return Diagram(n, std::move(blocks));
        case GenKind::p2:
            check(i), check(j);
            if (i == j) throw error("p_{i,j} needs distinct indices");
            blocks.push_back({i, j, -i, -j});
            for (int k = 1; k <= n; ++k)
                if (k != i && k != j) blocks.push_back({k, -k});
            return Diagram(n, std::move(blocks));
        case GenKind::p1:
            check(i);
            blocks.push_back({i});
            blocks.push_back({-i});
            for (int k = 1; k <= n; ++k)
                if (k != i) blocks.push_back({k, -k});
            return Diagram(n, std::move(blocks));
        case GenKind::e:
            check(i);
            for (int k = 1; k < i; ++k) blocks.push_back({k, -k});
            for (int k = i; k <= n; ++k) {
                blocks.push_back({k});
                blocks.push_back({-k});
            }
            return Diagram(n, std::move(blocks));
    }
    throw error("unreachable");
}

AlgebraElement generator(GenKind kind, int i, int j, int n) {
    Diagram d = generator_diagram(kind, i, j, n);
    if (kind == GenKind::e)
        return AlgebraElement(d, DeltaPoly::monomial(1, -(n - i + 1)));
    return AlgebraElement(d);
}

std::vector<Diagram> module_action_generators(int n) {
    std::vector<Diagram> gens;
    for (int i = 1; i < n; ++i) gens.push_back(generator_diagram(GenKind::s, i, i + 1, n));
    for (int i = 1; i < n; ++i) gens.push_back(generator_diagram(GenKind::p2, i, i + 1, n));
    for (int i = 1; i <= n; ++i) gens.push_back(generator_diagram(GenKind::p1, i, 0, n));
    return gens;
}

}  // namespace partalg
