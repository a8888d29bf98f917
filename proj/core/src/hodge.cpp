#include "k3scan/hodge.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "k3scan/errors.hpp"

namespace k3scan {

namespace {

std::vector<Int> divisors_of(Int d)
{
    std::vector<Int> divs;
    for (Int a = 1; a * a <= d; ++a) {
        if (d % a != 0)
            continue;
        divs.push_back(a);
        if (a != d / a)
            divs.push_back(d / a);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int totient(Int x)
{
    Int result = x;
    for (Int p = 2; p * p <= x; ++p) {
        if (x % p != 0)
            continue;
        while (x % p == 0)
            x /= p;
        result -= result / p;
    }
    if (x > 1)
        result -= result / x;
    return result;
}

// F_l = { i : d | l*w_i } depends on l only through g = gcd(l, d):
// d | l*w_i iff (d / gcd(d, w_i)) | g.
unsigned fixed_mask_for(const std::vector<Int>& w, Int d, Int g)
{
    unsigned mask = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Int order = d / std::gcd(d, w[i]);
        if (g % order == 0)
            mask |= 1u << i;
    }
    return mask;
}

// p *= (1 - t^a)
void multiply_one_minus(Polynomial& p, Int a)
{
    Polynomial q(p.size() + static_cast<std::size_t>(a), 0);
    for (std::size_t m = 0; m < p.size(); ++m) {
        q[m] = checked_add(q[m], p[m]);
        q[m + a] = checked_sub(q[m + a], p[m]);
    }
    p = std::move(q);
}

// p /= (1 - t^a), exact; nonzero remainder means the sector product is not
// a polynomial
void divide_one_minus_exact(Polynomial& p, Int a)
{
    if (p.empty())
        return;
    const std::size_t deg = p.size() - 1;
    const std::size_t ua = static_cast<std::size_t>(a);
    if (deg < ua) {
        for (Int c : p)
            if (c != 0)
                throw NonPolynomialSector("inexact division by 1 - t^" + std::to_string(a));
        p.assign(1, 0);
        return;
    }
    Polynomial q(deg - ua + 1, 0);
    for (std::size_t m = 0; m <= deg; ++m) {
        const Int val = checked_add(p[m], m >= ua ? q[m - ua] : 0);
        if (m < q.size())
            q[m] = val;
        else if (val != 0)
            throw NonPolynomialSector("inexact division by 1 - t^" + std::to_string(a));
    }
    p = std::move(q);
}

} // namespace

Polynomial restricted_poincare_series(const WeightVector& w_hat, const std::vector<int>& subset)
{
    const Int d = w_hat.degree();
    for (int idx : subset)
        if (idx < 1 || static_cast<std::size_t>(idx) > w_hat.size())
            throw std::out_of_range("subset index out of range");

    Polynomial p{1};
    for (int idx : subset)
        multiply_one_minus(p, d - w_hat[idx - 1]);
    for (int idx : subset)
        divide_one_minus_exact(p, w_hat[idx - 1]);
    return p;
}

Int euler_characteristic(const WeightVector& w_hat)
{
    if (w_hat.size() != 5)
        throw std::invalid_argument("euler_characteristic expects 5 weights");
    const auto& w = w_hat.components();
    const Int d = w_hat.degree();

    // sector count per fixed-slot mask, grouped by gcd classes of d
    std::array<Int, 32> sectors_with_mask{};
    for (Int g : divisors_of(d))
        sectors_with_mask[fixed_mask_for(w, d, g)] += totient(d / g);

    // product over S = F_l n F_r of (1 - d/w_i), on the common denominator
    // D = prod w_i:  T[S] = prod_{i in S} (w_i - d) * prod_{i not in S} w_i
    std::array<Int128, 32> numerator_product;
    for (unsigned mask = 0; mask < 32; ++mask) {
        Int128 t = 1;
        for (std::size_t i = 0; i < 5; ++i)
            t *= (mask >> i & 1u) ? (w[i] - d) : w[i];
        numerator_product[mask] = t;
    }

    Int128 sum = 0;
    for (unsigned m1 = 0; m1 < 32; ++m1) {
        if (sectors_with_mask[m1] == 0)
            continue;
        for (unsigned m2 = 0; m2 < 32; ++m2) {
            if (sectors_with_mask[m2] == 0)
                continue;
            sum += static_cast<Int128>(sectors_with_mask[m1]) * sectors_with_mask[m2] *
                   numerator_product[m1 & m2];
        }
    }

    Int128 denom = d;
    for (Int wi : w)
        denom *= wi;
    if (sum % denom != 0)
        throw std::logic_error("euler_characteristic: double sum not divisible by d");
    const Int128 chi = sum / denom;
    if (chi > INT64_MAX || chi < INT64_MIN)
        throw std::overflow_error("euler_characteristic overflow");
    return static_cast<Int>(chi);
}

std::map<std::pair<Int, Int>, Int> lg_spectrum(const WeightVector& w_hat)
{
    if (w_hat.size() != 5)
        throw std::invalid_argument("lg_spectrum expects 5 weights");
    const auto& w = w_hat.components();
    const Int d = w_hat.degree();

    std::map<Int, unsigned> mask_of_gcd;
    for (Int g : divisors_of(d))
        mask_of_gcd[g] = fixed_mask_for(w, d, g);

    // restricted Poincare series per mask, kept sparse; sectors sharing a
    // fixed locus share the series
    std::map<unsigned, std::vector<std::pair<Int, Int>>> series_cache;
    auto series_for = [&](unsigned mask) -> const std::vector<std::pair<Int, Int>>& {
        auto it = series_cache.find(mask);
        if (it != series_cache.end())
            return it->second;
        std::vector<int> subset;
        for (int i = 0; i < 5; ++i)
            if (mask >> i & 1u)
                subset.push_back(i + 1);
        const Polynomial p = restricted_poincare_series(w_hat, subset);
        std::vector<std::pair<Int, Int>> sparse;
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p[m] != 0)
                sparse.emplace_back(static_cast<Int>(m), p[m]);
        return series_cache.emplace(mask, std::move(sparse)).first->second;
    };

    std::map<std::pair<Int, Int>, Int> kept;
    for (Int l = 0; l < d; ++l) {
        const unsigned mask = mask_of_gcd.at(std::gcd(l, d));
        // twisted ground-state charge shifts, numerators over d
        Int q_minus = 0, q_plus = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            if (mask >> i & 1u)
                continue;
            const Int rem = l * w[i] % d;
            q_minus += rem - w[i];
            q_plus += d - rem - w[i];
        }
        for (const auto& [m, c] : series_for(mask)) {
            const Int left_num = m + q_minus;
            if (left_num % d != 0)
                continue; // projection: integer left charge
            kept[{left_num, m + q_plus}] += c;
        }
    }
    return kept;
}

HodgePair hodge_numbers(const WeightVector& w_hat)
{
    const auto kept = lg_spectrum(w_hat);
    const Int d = w_hat.degree();

    // re-check the spectrum invariants on every computation
    for (const auto& [charges, count] : kept) {
        const auto& [left, right] = charges;
        if (left < 0 || left > 3 * d || right < 0 || right > 3 * d)
            throw std::logic_error("kept state charge outside [0, 3]");
        const auto dual = kept.find({3 * d - left, 3 * d - right});
        if (dual == kept.end() || dual->second != count)
            throw std::logic_error("spectral duality count(q,qb) == count(3-q,3-qb) violated");
    }
    auto count_at = [&](Int a, Int b) {
        const auto it = kept.find({a * d, b * d});
        return it == kept.end() ? 0 : it->second;
    };
    if (count_at(0, 0) != 1 || count_at(3, 0) != 1)
        throw std::logic_error("identity/top state count is not 1");

    const Int h11 = count_at(2, 1);
    const Int h21 = count_at(1, 1);
    const Int chi = 2 * (h11 - h21);
    if (chi != euler_characteristic(w_hat))
        throw std::logic_error("hodge/euler cross-check failed");
    return HodgePair{h11, h21, chi};
}

const char* spectrum_convention()
{
    return "integer-left-charge";
}

void spectrum_self_test()
{
    const WeightVector quintic({1, 1, 1, 1, 1});
    HodgePair h{};
    try {
        h = hodge_numbers(quintic);
    } catch (const std::exception& e) {
        throw ConventionMismatch(std::string("quintic self-test failed: ") + e.what());
    }
    if (h.h11 != 1 || h.h21 != 101 || h.chi != -200)
        throw ConventionMismatch("quintic self-test failed: got h11=" + std::to_string(h.h11) +
                                 " h21=" + std::to_string(h.h21) +
                                 " chi=" + std::to_string(h.chi));
}

} // namespace k3scan
