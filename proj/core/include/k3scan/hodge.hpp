#pragma once

#include <map>
#include <utility>
#include <vector>

#include "k3scan/weights.hpp"

namespace k3scan {

struct HodgePair {
    Int h11;
    Int h21;
    Int chi; // = 2*(h11 - h21)

    bool operator==(const HodgePair&) const = default;
};

// Orbifold Euler characteristic of the degree-d Calabi-Yau hypersurface in
// P[w_hat], w_hat of length 5:
//   chi = (1/d) sum_{l,r=0}^{d-1} prod_{i: d|l*w_i, d|r*w_i} (1 - d/w_i)
// evaluated exactly, with (l, r) pairs grouped by gcd classes of d.
Int euler_characteristic(const WeightVector& w_hat);

// Dense coefficient vector, index = degree.
using Polynomial = std::vector<Int>;

// prod_{i in subset} (1 - t^(d - w_i)) / (1 - t^(w_i)) with d = deg(w_hat),
// by exact polynomial multiplication and division. subset holds 1-based
// indices; empty subset gives the constant 1. Throws NonPolynomialSector if
// any division is inexact.
Polynomial restricted_poincare_series(const WeightVector& w_hat,
                                      const std::vector<int>& subset);

// Kept (integer left charge) orbifold states of the length-5 system, keyed
// by charge numerators over the common denominator d, value = state count.
std::map<std::pair<Int, Int>, Int> lg_spectrum(const WeightVector& w_hat);

// Hodge numbers from the orbifold state count: h11 = kept states at charge
// (2,1), h21 at (1,1). Cross-checked against euler_characteristic and the
// spectral duality count(q,qb) == count(3-q,3-qb) on every call.
HodgePair hodge_numbers(const WeightVector& w_hat);

// Quintic walk-through gate: h=(1,101), chi=-200. Throws ConventionMismatch.
void spectrum_self_test();

// Returned by the self-test / recorded in output metadata.
const char* spectrum_convention();

} // namespace k3scan
