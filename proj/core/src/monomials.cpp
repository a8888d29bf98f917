#include "k3scan/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3scan {

Int weighted_degree(const WeightVector& w, const ExponentVector& nu)
{
    if (nu.size() != w.size())
        throw std::invalid_argument("exponent vector length does not match weights");
    Int d = 0;
    for (std::size_t j = 0; j < nu.size(); ++j) {
        if (nu[j] < 0)
            throw std::invalid_argument("exponents must be nonnegative");
        d = checked_add(d, checked_mul(w[j], nu[j]));
    }
    return d;
}

namespace {

void enumerate_rec(const std::vector<Int>& w, const std::vector<bool>& zeroed,
                   std::size_t slot, Int remaining, ExponentVector& current,
                   std::vector<ExponentVector>& out)
{
    if (slot == w.size()) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    if (zeroed[slot]) {
        current[slot] = 0;
        enumerate_rec(w, zeroed, slot + 1, remaining, current, out);
        return;
    }
    const Int max_exp = remaining / w[slot];
    for (Int e = 0; e <= max_exp; ++e) {
        current[slot] = e;
        enumerate_rec(w, zeroed, slot + 1, remaining - e * w[slot], current, out);
    }
    current[slot] = 0;
}

} // namespace

std::vector<ExponentVector> enumerate_compatible(const WeightVector& w, Int target_degree,
                                                 const std::vector<int>& zero_slots)
{
    if (target_degree < 0)
        throw std::invalid_argument("target degree must be nonnegative");
    std::vector<bool> zeroed(w.size(), false);
    for (int j : zero_slots) {
        if (j < 1 || static_cast<std::size_t>(j) > w.size())
            throw std::out_of_range("zero slot index out of range");
        zeroed[j - 1] = true;
    }
    std::vector<ExponentVector> out;
    ExponentVector current(w.size(), 0);
    enumerate_rec(w.components(), zeroed, 0, target_degree, current, out);
    return out;
}

bool check_condition_i(const WeightVector& w_hat, int deleted_index,
                       const std::vector<Int>& rho)
{
    if (deleted_index < 1 || static_cast<std::size_t>(deleted_index) > w_hat.size())
        throw std::out_of_range("deleted index out of range");
    if (rho.size() != w_hat.size() - 1)
        throw std::invalid_argument("rho length must be weights length minus one");

    for (const auto& nu : enumerate_compatible(w_hat, w_hat.degree(), {deleted_index})) {
        std::size_t j = 0; // surviving-slot position, gap closed
        for (std::size_t slot = 0; slot < nu.size(); ++slot) {
            if (slot == static_cast<std::size_t>(deleted_index - 1))
                continue;
            if (nu[slot] % rho[j] != 0)
                return false;
            ++j;
        }
    }
    return true;
}

std::optional<std::vector<Int>> semigroup_member(Int target, const std::vector<Int>& generators)
{
    if (generators.empty())
        throw std::invalid_argument("semigroup_member needs at least one generator");
    for (Int g : generators)
        if (g < 1)
            throw std::invalid_argument("generators must be positive");
    if (target < 0)
        return std::nullopt;

    const std::size_t n = generators.size();
    // feasible[j][t]: t is reachable using generators j..n-1
    std::vector<std::vector<char>> feasible(n + 1, std::vector<char>(target + 1, 0));
    feasible[n][0] = 1;
    for (std::size_t j = n; j-- > 0;) {
        const Int g = generators[j];
        for (Int t = 0; t <= target; ++t)
            feasible[j][t] = feasible[j + 1][t] || (t >= g && feasible[j][t - g]);
    }
    if (!feasible[0][target])
        return std::nullopt;

    // smallest multiplier at each slot in turn gives the lexicographically
    // smallest witness
    std::vector<Int> witness(n, 0);
    Int remaining = target;
    for (std::size_t j = 0; j < n; ++j) {
        Int a = 0;
        while (!feasible[j + 1][remaining - a * generators[j]])
            ++a;
        witness[j] = a;
        remaining -= a * generators[j];
    }
    return witness;
}

ExponentVector push_forward(const ExponentVector& nu, const std::vector<Int>& rho)
{
    if (nu.size() != rho.size())
        throw std::invalid_argument("exponent and rho lengths differ");
    ExponentVector mu(nu.size());
    for (std::size_t j = 0; j < nu.size(); ++j) {
        if (rho[j] < 1)
            throw std::invalid_argument("rho components must be positive");
        if (nu[j] % rho[j] != 0)
            throw std::domain_error("push_forward: exponent not divisible by rho "
                                    "(condition (i) violated)");
        mu[j] = nu[j] / rho[j];
    }
    return mu;
}

} // namespace k3scan
