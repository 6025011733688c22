#pragma once

#include <cstdint>
#include <vector>

#include "partalg/partition.hpp"

namespace partalg {

// Dense integer matrix, row-major.
struct MatI {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<long long> data;
    MatI() = default;
    MatI(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}
    long long& at(size_t r, size_t c) { return data[r * cols + c]; }
    long long at(size_t r, size_t c) const { return data[r * cols + c]; }
};

MatI mati_mul(const MatI& a, const MatI& b);
MatI mati_identity(size_t n);
bool operator==(const MatI& a, const MatI& b);

using Tableau = std::vector<std::vector<int>>;  // rows of a filling with 1..m

// Standard Young tableaux of the given shape, ordered by column reading word.
std::vector<Tableau> standard_tableaux(const Partition& shape);

// Count of standard tableaux via the hook length formula.
long hook_length_count(const Partition& shape);

// The integral Specht module S^lambda on the standard polytabloid basis.
// Generator matrices give the left action of the adjacent transpositions
// s_1..s_{m-1}; the Gram matrix is the canonical bilinear form. Everything
// reduces correctly into any field.
struct SpechtIntegral {
    Partition shape;
    int m = 0;      // |shape|
    long dim = 0;   // number of standard tableaux
    std::vector<Tableau> tableaux;
    std::vector<MatI> gens;  // m-1 matrices
    MatI gram;
};

SpechtIntegral specht_integral(const Partition& shape);

// Matrix of an arbitrary permutation (images 1-based) on the Specht basis.
MatI specht_permutation_matrix(const SpechtIntegral& sp, const std::vector<int>& images);

// Expansion of the polytabloid of an arbitrary (not necessarily standard)
// filling over the standard basis; exposed for tests.
std::vector<long long> straighten_polytabloid(const SpechtIntegral& sp, const Tableau& t);

}  // namespace partalg
