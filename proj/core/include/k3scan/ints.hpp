#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace k3scan {

// Weights, degrees and exponents all live in checked 64-bit integers; the
// few places whose intermediates can exceed 64 bits (the orbifold Euler
// double sum) accumulate in 128 bits.
using Int = std::int64_t;
using Int128 = __int128;

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        throw std::domain_error("lcm of zero");
    return checked_mul(a / std::gcd(a, b), b);
}

} // namespace k3scan
