#pragma once

#include <optional>
#include <vector>

#include "k3scan/weights.hpp"

namespace k3scan {

// Nonnegative exponent tuple of a monomial, evaluated against a weight
// vector of equal length.
using ExponentVector = std::vector<Int>;

Int weighted_degree(const WeightVector& w, const ExponentVector& nu);

// All nu >= 0 with w.nu == target_degree and nu_j == 0 for every 1-based
// j in zero_slots, in strictly increasing lexicographic order.
std::vector<ExponentVector> enumerate_compatible(const WeightVector& w, Int target_degree,
                                                 const std::vector<int>& zero_slots = {});

// Condition (i): every exponent compatible with w_hat that vanishes at the
// deleted slot is divisible slotwise by rho. rho has length n = size-1 and
// pairs positionally with the surviving slots after closing the gap.
bool check_condition_i(const WeightVector& w_hat, int deleted_index,
                       const std::vector<Int>& rho);

// Nonnegative multipliers a with sum a_j * generators_j == target, or
// nullopt if target is not in the numerical semigroup. The witness is the
// lexicographically smallest multiplier tuple.
std::optional<std::vector<Int>> semigroup_member(Int target,
                                                 const std::vector<Int>& generators);

// mu_j = nu_j / rho_j, exact. Inexact division signals that condition (i)
// did not hold for nu.
ExponentVector push_forward(const ExponentVector& nu, const std::vector<Int>& rho);

} // namespace k3scan
