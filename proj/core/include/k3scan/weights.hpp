#pragma once

#include <cstddef>
#include <vector>

#include "k3scan/ints.hpp"

namespace k3scan {

// Ordered tuple of positive integer weights. The degree is the component
// sum (the Calabi-Yau convention d = sum w_i). Fewer than two components
// are rejected at construction; the gcd/lcm formulas presuppose n >= 2.
class WeightVector {
public:
    explicit WeightVector(std::vector<Int> components);

    const std::vector<Int>& components() const { return components_; }
    Int degree() const { return degree_; }
    std::size_t size() const { return components_.size(); }
    Int operator[](std::size_t index0) const { return components_[index0]; }

    // New vector with the given 1-based slot removed; order preserved.
    WeightVector without_slot(int index1) const;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<Int> components_;
    Int degree_;
};

// rho, delta, k and the normalized vector of some original w, tied together
// by rho_i * delta_i == k and normalized_i * delta_i == w_i for every i.
struct NormalizationData {
    std::vector<Int> rho;
    std::vector<Int> delta;
    Int k;
    WeightVector normalized;
    Int reduced_degree; // sum of normalized components

    bool operator==(const NormalizationData&) const = default;
};

// Component i is the gcd of all components of w except the i-th.
std::vector<Int> rho(const WeightVector& w);

// delta_i = lcm of the other rho's; w_bar_i = w_i / delta_i (exact).
// Component order is preserved; sorting happens only in canonical_form.
NormalizationData normalize(const WeightVector& w);

// True iff rho(w) == (1,...,1), i.e. w is fixed by normalization.
bool is_well_formed(const WeightVector& w);

// Components sorted in non-increasing order (for table comparison).
WeightVector canonical_form(const WeightVector& w);

} // namespace k3scan
