#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3scan/hodge.hpp"
#include "k3scan/monomials.hpp"
#include "k3scan/weights.hpp"

namespace k3scan {

// A verified pencil hit: deleting slot i from w_hat satisfies conditions
// (i)-(iv), so the generic hypersurface carries a pencil of subvarieties
// isomorphic to transversal hypersurfaces in P[w_bar].
struct PencilRecord {
    WeightVector w_hat;           // original vector, length n+1
    int deleted_index;            // 1-based slot i
    WeightVector reduced;         // w_hat with slot i removed, original order
    NormalizationData norm;       // normalization of reduced
    WeightVector w_bar_canonical; // canonical form of norm.normalized
    // Multipliers a with sum a_j * reduced_j == w_hat[i] (condition (iv));
    // absent only for K3 records whose partition check failed.
    std::optional<std::vector<Int>> partition_witness;
    std::optional<HodgePair> spectra;

    bool operator==(const PencilRecord&) const = default;
};

// All deletions i of the length-5 system passing conditions (i)-(iv), in
// increasing i. Slots repeating an earlier weight value are skipped: equal
// weights give the same reduced tuple, hence the identical slice up to a
// coordinate exchange (the tables list one row per such class). Throws
// NotTransversal when w_hat itself is not admissible.
std::vector<PencilRecord> scan_weight(const WeightVector& w_hat);

// Length-4 analogue: deletions whose normalized w_bar is a transversal
// elliptic ambient (1,1,1), (2,1,1) or (3,2,1) and conditions (i)-(iii)
// hold; condition (iv) is evaluated and recorded in the witness field.
std::vector<PencilRecord> scan_k3_weight(const WeightVector& w_hat);

enum class ScanMode { cy, k3 };

struct ScanFailure {
    std::size_t input_index;
    std::string message;
};

struct ScanBatch {
    std::vector<PencilRecord> records;
    std::vector<ScanFailure> failures;
};

// Per-weight scan over the list; records in (input order, i), failures
// (non-transversal or wrong-length entries) collected, never fatal.
// jobs > 1 runs inputs in parallel; output order is unaffected.
ScanBatch scan_list(const std::vector<WeightVector>& inputs, ScanMode mode, int jobs = 1);

} // namespace k3scan
