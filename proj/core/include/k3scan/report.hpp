#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "k3scan/pencilscan.hpp"

namespace k3scan {

// One transcribed appendix row: Euler #, h^{1,1}, w_hat, deleted index, w_bar.
struct GoldenRowCY {
    Int euler;
    Int h11;
    std::array<Int, 5> w_hat;
    int i;
    std::array<Int, 4> w_bar;

    bool operator==(const GoldenRowCY&) const = default;
};

// One row of the K3 table: w_hat, deleted index, elliptic ambient w_bar.
struct GoldenRowK3 {
    std::array<Int, 4> w_hat;
    int i;
    std::array<Int, 3> w_bar;

    bool operator==(const GoldenRowK3&) const = default;
};

// CSV schemas (header line required, LF endings, integers without spaces):
//   CY: euler,h11,w1,w2,w3,w4,w5,i,v1,v2,v3,v4
//   K3: w1,w2,w3,w4,i,v1,v2,v3
// Duplicate (w_hat, i) keys and invariant violations are rejected.
std::vector<GoldenRowCY> ingest_golden_cy(std::istream& in);
std::vector<GoldenRowK3> ingest_golden_k3(std::istream& in);
std::vector<GoldenRowCY> load_golden_cy(const std::string& path);
std::vector<GoldenRowK3> load_golden_k3(const std::string& path);

enum class RowStatus { match, missing, extra, mismatch };

struct RowReport {
    RowStatus status;
    std::string detail; // "w_hat | i | w_bar" plus what differed
};

struct VerificationReport {
    std::vector<RowReport> rows; // golden order first, then extras in scan order
    int matches = 0;
    int missing = 0;
    int extras = 0;
    int mismatches = 0;

    bool all_match() const { return missing == 0 && extras == 0 && mismatches == 0; }
};

// Rows are keyed by (w_hat as printed, i); w_bar is compared in canonical
// form, spectra (when the records carry them) against the euler/h11 columns.
VerificationReport verify_against_golden(const std::vector<PencilRecord>& records,
                                         const std::vector<GoldenRowCY>& golden);
VerificationReport verify_against_golden(const std::vector<PencilRecord>& records,
                                         const std::vector<GoldenRowK3>& golden);

enum class TableFormat { csv, json, tex };
enum class TableOrdering { input, appendix };

// Deterministic, byte-exact serialization of pencil records. CSV and TeX of
// length-5 records require spectra (the schema has euler/h11 columns), as
// does appendix ordering (sorted by Euler # non-increasing, ties in input
// order). JSON carries rho, delta, k and the partition witness as well.
// mode picks the schema when records is empty (header-only output).
std::string emit_table(const std::vector<PencilRecord>& records, TableFormat format,
                       TableOrdering ordering = TableOrdering::input,
                       ScanMode mode = ScanMode::cy);

// Inverse of emit_table(..., json): full records including normalization
// data, witness and spectra.
std::vector<PencilRecord> read_records_json(std::istream& in);
std::vector<PencilRecord> load_records_json(const std::string& path);

} // namespace k3scan
