#include "k3scan/transversality.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace k3scan {

namespace {

// reach[t] = t is a nonnegative combination of the weights selected by mask
std::vector<char> reachable_degrees(const std::vector<Int>& w, unsigned mask, Int d)
{
    std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(mask >> i & 1u))
            continue;
        for (Int t = w[i]; t <= d; ++t)
            if (reach[t - w[i]])
                reach[t] = 1;
    }
    return reach;
}

bool subset_criterion(const std::vector<Int>& w, Int d)
{
    const std::size_t n = w.size();
    std::vector<unsigned> masks;
    masks.reserve((1u << n) - 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        masks.push_back(mask);
    // singletons first; they reject most candidates
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (unsigned mask : masks) {
        const auto reach = reachable_degrees(w, mask, d);
        if (reach[d])
            continue; // (A): a degree-d monomial supported in I
        // (B): enough outside slots j with a monomial of degree d - w_j in I
        const int need = std::popcount(mask);
        int have = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1u)
                continue;
            if (d - w[j] >= 0 && reach[d - w[j]])
                ++have;
        }
        if (have < need)
            return false;
    }
    return true;
}

std::mutex cache_mutex;
std::map<std::pair<std::vector<Int>, Int>, bool> cache;

// the singleton case of the subset criterion, divisibility arithmetic only
bool singletons_pass(const std::vector<Int>& w, Int d)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (d % w[i] == 0)
            continue;
        bool ok = false;
        for (std::size_t j = 0; j < w.size() && !ok; ++j)
            if (j != i && d - w[j] >= 0 && (d - w[j]) % w[i] == 0)
                ok = true;
        if (!ok)
            return false;
    }
    return true;
}

void partitions_rec(int slots_left, Int max_part, Int remaining, std::vector<Int>& current,
                    std::vector<std::vector<Int>>& out)
{
    if (slots_left == 1) {
        if (remaining >= 1 && remaining <= max_part) {
            current.push_back(remaining);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    const Int upper = std::min<Int>(max_part, remaining - (slots_left - 1));
    for (Int v = upper; v >= 1; --v) {
        if (v * slots_left < remaining)
            break; // even repeating v everywhere falls short
        current.push_back(v);
        partitions_rec(slots_left - 1, v, remaining - v, current, out);
        current.pop_back();
    }
}

} // namespace

bool is_transversal(const WeightVector& w, Int d)
{
    if (d < 1)
        throw std::invalid_argument("degree must be positive");
    if (w.size() > 16)
        throw std::invalid_argument("too many weights for the subset criterion");

    const auto key = std::make_pair(canonical_form(w).components(), d);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    const bool result = subset_criterion(key.first, d); // permutation-invariant
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, result);
    }
    return result;
}

std::vector<WeightSystemRecord> enumerate_cy_weight_systems(int length, Int d_max)
{
    if (length < 3 || length > 5)
        throw std::invalid_argument("length must be 3, 4 or 5");
    if (d_max < length)
        throw std::invalid_argument("d_max must be at least the length");

    std::vector<WeightSystemRecord> out;
    std::vector<Int> current;
    std::vector<std::vector<Int>> tuples;
    for (Int d = length; d <= d_max; ++d) {
        tuples.clear();
        partitions_rec(length, d, d, current, tuples);
        std::vector<std::vector<Int>> keep;
        for (auto& t : tuples) {
            if (!singletons_pass(t, d))
                continue;
            WeightVector w(std::move(t));
            if (!is_well_formed(w))
                continue;
            if (!is_transversal(w, d))
                continue;
            keep.push_back(w.components());
        }
        std::sort(keep.begin(), keep.end());
        for (auto& c : keep)
            out.push_back(WeightSystemRecord{WeightVector(std::move(c)), d, true});
    }
    return out;
}

} // namespace k3scan
