#pragma once

#include <vector>

#include "k3scan/weights.hpp"

namespace k3scan {

// Quasi-smoothness of the generic degree-d hypersurface in P[w]: for every
// nonempty index subset I, either some monomial of degree d is supported in
// I, or at least |I| outside slots j admit a monomial of degree d - w_j
// supported in I. Results are memoized by canonical (w, d).
bool is_transversal(const WeightVector& w, Int d);

struct WeightSystemRecord {
    WeightVector weights; // canonical (non-increasing) form
    Int degree;           // component sum
    bool transversal;
};

// All well-formed transversal Calabi-Yau weight systems of the given length
// with degree <= d_max, canonical form, sorted by (degree, lexicographic
// weights), duplicate-free. length must be 3, 4 or 5.
std::vector<WeightSystemRecord> enumerate_cy_weight_systems(int length, Int d_max);

} // namespace k3scan
