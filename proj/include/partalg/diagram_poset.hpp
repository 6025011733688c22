#pragma once

#include <vector>

#include "partalg/algebra_element.hpp"
#include "partalg/diagram.hpp"

namespace partalg {

// I(n,t): diagrams with exactly t propagating blocks and barred t+1..n in
// singleton blocks. Each propagating block then holds exactly one of -1..-t.
struct DiagramSetIT {
    int n = 0;
    int t = 0;
    std::vector<Diagram> members;  // canonical order
};

DiagramSetIT enumerate_IT(int n, int t);

// Refinement order on diagrams as set-partitions: x <= y iff every block of x
// is contained in a block of y (minimal = most refined).
bool refinement_leq(const Diagram& x, const Diagram& y);

// Mobius function of the poset I(n,t) (recursion restricted to I(n,t)).
long mobius(const Diagram& x, const Diagram& y);

// Minimal elements M(n,t): propagating blocks {a_i, -i}, everything else a
// singleton.
std::vector<Diagram> minimal_elements(int n, int t);

// One integer combination per y in M(n,t): sum over x >= y of mobius(y,x)*x.
std::vector<AlgebraElement> psi_basis(int n, int t);

// The right S_t-action on I(n,t) permutes which propagating block carries
// which barred point and is free. Orbit representatives attach the block with
// the i-th smallest northern minimum to -i.
std::vector<Diagram> propagating_orbit_reps(int n, int t);

// d = rep * sigma with rep an orbit representative; sigma as 1-based images.
struct ITDecomposition {
    Diagram rep;
    std::vector<int> sigma;
};
ITDecomposition decompose_IT(const Diagram& d, int t);

}  // namespace partalg
