#include "k3scan/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3scan {

WeightVector::WeightVector(std::vector<Int> components)
    : components_(std::move(components)), degree_(0)
{
    if (components_.size() < 2)
        throw std::invalid_argument("weight vector needs at least 2 components");
    for (Int w : components_) {
        if (w < 1)
            throw std::invalid_argument("weight components must be positive");
        degree_ = checked_add(degree_, w);
    }
}

WeightVector WeightVector::without_slot(int index1) const
{
    if (index1 < 1 || static_cast<std::size_t>(index1) > size())
        throw std::out_of_range("slot index out of range");
    std::vector<Int> rest;
    rest.reserve(size() - 1);
    for (std::size_t j = 0; j < size(); ++j)
        if (j != static_cast<std::size_t>(index1 - 1))
            rest.push_back(components_[j]);
    return WeightVector(std::move(rest));
}

std::vector<Int> rho(const WeightVector& w)
{
    const auto& c = w.components();
    const std::size_t n = c.size();
    std::vector<Int> result(n);
    // prefix/suffix gcds give all leave-one-out gcds in one pass
    std::vector<Int> prefix(n + 1, 0), suffix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = std::gcd(prefix[i], c[i]);
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = std::gcd(suffix[i + 1], c[i]);
    for (std::size_t i = 0; i < n; ++i)
        result[i] = std::gcd(prefix[i], suffix[i + 1]);
    return result;
}

NormalizationData normalize(const WeightVector& w)
{
    const auto& c = w.components();
    const std::size_t n = c.size();
    std::vector<Int> r = rho(w);

    std::vector<Int> prefix(n + 1, 1), suffix(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = checked_lcm(prefix[i], r[i]);
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = checked_lcm(suffix[i + 1], r[i]);

    std::vector<Int> delta(n);
    for (std::size_t i = 0; i < n; ++i)
        delta[i] = checked_lcm(prefix[i], suffix[i + 1]);

    const Int k = checked_mul(r[0], delta[0]);
    std::vector<Int> normalized(n);
    Int reduced_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (checked_mul(r[i], delta[i]) != k)
            throw std::logic_error("normalize: rho_i * delta_i is not constant");
        if (c[i] % delta[i] != 0)
            throw std::logic_error("normalize: delta does not divide the weight");
        normalized[i] = c[i] / delta[i];
        reduced_degree = checked_add(reduced_degree, normalized[i]);
    }

    return NormalizationData{std::move(r), std::move(delta), k,
                             WeightVector(std::move(normalized)), reduced_degree};
}

bool is_well_formed(const WeightVector& w)
{
    for (Int r : rho(w))
        if (r != 1)
            return false;
    return true;
}

WeightVector canonical_form(const WeightVector& w)
{
    std::vector<Int> c = w.components();
    std::sort(c.begin(), c.end(), std::greater<Int>());
    return WeightVector(std::move(c));
}

} // namespace k3scan
