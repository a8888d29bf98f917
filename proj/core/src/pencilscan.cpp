#include "k3scan/pencilscan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "k3scan/errors.hpp"
#include "k3scan/transversality.hpp"

namespace k3scan {

namespace {

Int dot(const WeightVector& w, const std::vector<Int>& v)
{
    Int sum = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        sum = checked_add(sum, checked_mul(w[j], v[j]));
    return sum;
}

std::string describe(const WeightVector& w)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < w.size(); ++j)
        os << (j ? "," : "") << w[j];
    os << ")";
    return os.str();
}

// Deleting slot i when w_i equals an earlier w_j repeats the slice of the
// earlier slot up to a coordinate exchange; the paper's tables list one row
// per such class.
bool repeats_earlier_weight(const WeightVector& w, int index1)
{
    for (int j = 0; j < index1 - 1; ++j)
        if (w[j] == w[index1 - 1])
            return true;
    return false;
}

bool is_elliptic_ambient(const WeightVector& w_bar_canonical)
{
    static const std::vector<std::vector<Int>> ambients = {
        {1, 1, 1}, {2, 1, 1}, {3, 2, 1}};
    return std::find(ambients.begin(), ambients.end(), w_bar_canonical.components()) !=
           ambients.end();
}

std::vector<PencilRecord> scan_impl(const WeightVector& w_hat, ScanMode mode)
{
    const std::size_t expected = mode == ScanMode::cy ? 5 : 4;
    if (w_hat.size() != expected)
        throw std::invalid_argument("scan expects a length-" + std::to_string(expected) +
                                    " weight vector, got " + describe(w_hat));
    const Int d = w_hat.degree();
    if (!is_transversal(w_hat, d))
        throw NotTransversal("weight system " + describe(w_hat) + " is not admissible");

    std::vector<PencilRecord> out;
    for (int i = 1; i <= static_cast<int>(expected); ++i) {
        if (repeats_earlier_weight(w_hat, i))
            continue;
        const WeightVector reduced = w_hat.without_slot(i);
        std::vector<Int> r = rho(reduced);
        if (dot(reduced, r) != d) // (ii)
            continue;
        NormalizationData norm = normalize(reduced);
        if (!is_transversal(norm.normalized, norm.reduced_degree)) // (iii)
            continue;
        WeightVector w_bar_canonical = canonical_form(norm.normalized);
        if (mode == ScanMode::k3 && !is_elliptic_ambient(w_bar_canonical))
            continue; // (iii), restricted to the three elliptic ambients
        if (!check_condition_i(w_hat, i, norm.rho)) // (i)
            continue;
        auto witness = semigroup_member(w_hat[i - 1], reduced.components()); // (iv)
        if (mode == ScanMode::cy && !witness)
            continue;
        if (d != checked_mul(norm.k, norm.reduced_degree))
            throw std::logic_error("scan: d == k * d_bar violated");
        out.push_back(PencilRecord{w_hat, i, reduced, std::move(norm),
                                   std::move(w_bar_canonical), std::move(witness),
                                   std::nullopt});
    }
    return out;
}

} // namespace

std::vector<PencilRecord> scan_weight(const WeightVector& w_hat)
{
    return scan_impl(w_hat, ScanMode::cy);
}

std::vector<PencilRecord> scan_k3_weight(const WeightVector& w_hat)
{
    return scan_impl(w_hat, ScanMode::k3);
}

ScanBatch scan_list(const std::vector<WeightVector>& inputs, ScanMode mode, int jobs)
{
    if (jobs < 1)
        throw std::invalid_argument("jobs must be positive");

    std::vector<std::vector<PencilRecord>> per_input(inputs.size());
    std::vector<std::string> failure(inputs.size());
    std::vector<char> failed(inputs.size(), 0);

    std::atomic<std::size_t> next{0};
    std::exception_ptr fatal;
    std::mutex fatal_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= inputs.size())
                return;
            try {
                per_input[idx] = scan_impl(inputs[idx], mode);
            } catch (const NotTransversal& e) {
                failed[idx] = 1;
                failure[idx] = e.what();
            } catch (const std::invalid_argument& e) {
                failed[idx] = 1;
                failure[idx] = e.what();
            } catch (...) {
                std::lock_guard<std::mutex> lock(fatal_mutex);
                if (!fatal)
                    fatal = std::current_exception();
                return;
            }
        }
    };

    const std::size_t thread_count =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(inputs.size(), 1));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }
    if (fatal)
        std::rethrow_exception(fatal);

    ScanBatch batch;
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        if (failed[idx]) {
            batch.failures.push_back(ScanFailure{idx, failure[idx]});
            continue;
        }
        for (auto& rec : per_input[idx])
            batch.records.push_back(std::move(rec));
    }
    return batch;
}

} // namespace k3scan
