#include "k3scan/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "k3scan/errors.hpp"

namespace k3scan {

namespace {

constexpr const char* kHeaderCY = "euler,h11,w1,w2,w3,w4,w5,i,v1,v2,v3,v4";
constexpr const char* kHeaderK3 = "w1,w2,w3,w4,i,v1,v2,v3";

Int parse_int(const std::string& field, int line)
{
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("not an integer: '" + field + "'", line);
    return value;
}

std::vector<Int> parse_csv_line(const std::string& line_text, std::size_t expected, int line)
{
    std::vector<Int> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line_text.find(',', start);
        const std::string field = line_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        fields.push_back(parse_int(field, line));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (fields.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " fields, got " +
                             std::to_string(fields.size()),
                         line);
    return fields;
}

bool k3_ambient(const std::array<Int, 3>& v)
{
    return v == std::array<Int, 3>{1, 1, 1} || v == std::array<Int, 3>{2, 1, 1} ||
           v == std::array<Int, 3>{3, 2, 1};
}

template <std::size_t N>
std::string tuple_text(const std::array<Int, N>& a)
{
    std::ostringstream os;
    for (std::size_t j = 0; j < N; ++j)
        os << (j ? "," : "") << a[j];
    return os.str();
}

std::string key_text(const std::vector<Int>& w, int i)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < w.size(); ++j)
        os << (j ? "," : "") << w[j];
    os << ") i=" << i;
    return os.str();
}

using Key = std::pair<std::vector<Int>, int>;

Key record_key(const PencilRecord& rec)
{
    return {rec.w_hat.components(), rec.deleted_index};
}

template <typename Golden>
VerificationReport verify_impl(const std::vector<PencilRecord>& records,
                               const std::vector<Golden>& golden)
{
    std::map<Key, const PencilRecord*> by_key;
    for (const auto& rec : records)
        by_key.emplace(record_key(rec), &rec); // duplicate scans of one input collapse here

    std::set<Key> golden_keys;
    VerificationReport report;

    for (const auto& row : golden) {
        const Key key{{row.w_hat.begin(), row.w_hat.end()}, row.i};
        golden_keys.insert(key);
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            report.rows.push_back({RowStatus::missing, key_text(key.first, key.second)});
            ++report.missing;
            continue;
        }
        const PencilRecord& rec = *it->second;
        std::string why;
        const auto& vbar = rec.w_bar_canonical.components();
        if (!std::equal(vbar.begin(), vbar.end(), row.w_bar.begin(), row.w_bar.end()))
            why = "w_bar differs";
        if constexpr (std::is_same_v<Golden, GoldenRowCY>) {
            if (rec.spectra) {
                if (rec.spectra->chi != row.euler)
                    why += std::string(why.empty() ? "" : "; ") + "euler differs";
                if (rec.spectra->h11 != row.h11)
                    why += std::string(why.empty() ? "" : "; ") + "h11 differs";
            }
        }
        if (why.empty()) {
            report.rows.push_back({RowStatus::match, key_text(key.first, key.second)});
            ++report.matches;
        } else {
            report.rows.push_back(
                {RowStatus::mismatch, key_text(key.first, key.second) + ": " + why});
            ++report.mismatches;
        }
    }

    std::set<Key> reported_extra;
    for (const auto& rec : records) {
        const Key key = record_key(rec);
        if (golden_keys.count(key) || reported_extra.count(key))
            continue;
        reported_extra.insert(key);
        report.rows.push_back({RowStatus::extra, key_text(key.first, key.second)});
        ++report.extras;
    }
    return report;
}

} // namespace

std::vector<GoldenRowCY> ingest_golden_cy(std::istream& in)
{
    std::vector<GoldenRowCY> rows;
    std::set<Key> seen;
    std::string line_text;
    int line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        if (!line_text.empty() && line_text.back() == '\r')
            line_text.pop_back();
        if (line == 1) {
            if (line_text != kHeaderCY)
                throw ParseError("bad CY golden header", line);
            continue;
        }
        if (line_text.empty())
            continue;
        const auto f = parse_csv_line(line_text, 12, line);
        GoldenRowCY row{f[0], f[1], {f[2], f[3], f[4], f[5], f[6]},
                        static_cast<int>(f[7]), {f[8], f[9], f[10], f[11]}};
        if (row.h11 < 0)
            throw ParseError("negative h11", line);
        if (row.i < 1 || row.i > 5)
            throw ParseError("deleted index out of range", line);
        for (Int w : row.w_hat)
            if (w < 1)
                throw ParseError("weights must be positive", line);
        if (!std::is_sorted(row.w_bar.rbegin(), row.w_bar.rend()))
            throw ParseError("w_bar not in canonical (non-increasing) order", line);
        for (Int v : row.w_bar)
            if (v < 1)
                throw ParseError("w_bar entries must be positive", line);
        const Key key{{row.w_hat.begin(), row.w_hat.end()}, row.i};
        if (!seen.insert(key).second)
            throw ParseError("duplicate (w_hat, i) row " + key_text(key.first, key.second), line);
        rows.push_back(row);
    }
    return rows;
}

std::vector<GoldenRowK3> ingest_golden_k3(std::istream& in)
{
    std::vector<GoldenRowK3> rows;
    std::set<Key> seen;
    std::string line_text;
    int line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        if (!line_text.empty() && line_text.back() == '\r')
            line_text.pop_back();
        if (line == 1) {
            if (line_text != kHeaderK3)
                throw ParseError("bad K3 golden header", line);
            continue;
        }
        if (line_text.empty())
            continue;
        const auto f = parse_csv_line(line_text, 8, line);
        GoldenRowK3 row{{f[0], f[1], f[2], f[3]}, static_cast<int>(f[4]), {f[5], f[6], f[7]}};
        if (row.i < 1 || row.i > 4)
            throw ParseError("deleted index out of range", line);
        for (Int w : row.w_hat)
            if (w < 1)
                throw ParseError("weights must be positive", line);
        if (!k3_ambient(row.w_bar))
            throw ParseError("w_bar is not one of the elliptic ambients", line);
        const Key key{{row.w_hat.begin(), row.w_hat.end()}, row.i};
        if (!seen.insert(key).second)
            throw ParseError("duplicate (w_hat, i) row " + key_text(key.first, key.second), line);
        rows.push_back(row);
    }
    return rows;
}

std::vector<GoldenRowCY> load_golden_cy(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return ingest_golden_cy(in);
}

std::vector<GoldenRowK3> load_golden_k3(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return ingest_golden_k3(in);
}

VerificationReport verify_against_golden(const std::vector<PencilRecord>& records,
                                         const std::vector<GoldenRowCY>& golden)
{
    return verify_impl(records, golden);
}

VerificationReport verify_against_golden(const std::vector<PencilRecord>& records,
                                         const std::vector<GoldenRowK3>& golden)
{
    return verify_impl(records, golden);
}

namespace {

ScanMode mode_of(const std::vector<PencilRecord>& records, ScanMode fallback)
{
    if (records.empty())
        return fallback;
    const std::size_t n = records.front().w_hat.size();
    for (const auto& rec : records)
        if (rec.w_hat.size() != n)
            throw std::invalid_argument("emit_table: mixed record lengths");
    if (n == 5)
        return ScanMode::cy;
    if (n == 4)
        return ScanMode::k3;
    throw std::invalid_argument("emit_table: unsupported record length");
}

std::vector<const PencilRecord*> ordered_view(const std::vector<PencilRecord>& records,
                                              TableOrdering ordering)
{
    std::vector<const PencilRecord*> view;
    view.reserve(records.size());
    for (const auto& rec : records)
        view.push_back(&rec);
    if (ordering == TableOrdering::appendix) {
        for (const auto* rec : view)
            if (!rec->spectra)
                throw std::invalid_argument("appendix ordering requires spectra");
        std::stable_sort(view.begin(), view.end(), [](const PencilRecord* a,
                                                      const PencilRecord* b) {
            return a->spectra->chi > b->spectra->chi;
        });
    }
    return view;
}

void append_ints(std::ostream& os, const std::vector<Int>& v, const char* sep,
                 bool leading_sep)
{
    for (std::size_t j = 0; j < v.size(); ++j)
        os << (j || leading_sep ? sep : "") << v[j];
}

std::string emit_csv(const std::vector<const PencilRecord*>& view, ScanMode mode)
{
    std::ostringstream os;
    os << (mode == ScanMode::cy ? kHeaderCY : kHeaderK3) << '\n';
    for (const auto* rec : view) {
        if (mode == ScanMode::cy) {
            if (!rec->spectra)
                throw std::invalid_argument("CSV of length-5 records requires spectra");
            os << rec->spectra->chi << ',' << rec->spectra->h11 << ',';
        }
        append_ints(os, rec->w_hat.components(), ",", false);
        os << ',' << rec->deleted_index << ',';
        append_ints(os, rec->w_bar_canonical.components(), ",", false);
        os << '\n';
    }
    return os.str();
}

std::string emit_json(const std::vector<const PencilRecord*>& view, ScanMode mode)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto* rec : view) {
        nlohmann::ordered_json obj;
        if (mode == ScanMode::cy && rec->spectra) {
            obj["euler"] = rec->spectra->chi;
            obj["h11"] = rec->spectra->h11;
        }
        const auto& w = rec->w_hat.components();
        for (std::size_t j = 0; j < w.size(); ++j)
            obj["w" + std::to_string(j + 1)] = w[j];
        obj["i"] = rec->deleted_index;
        const auto& v = rec->w_bar_canonical.components();
        for (std::size_t j = 0; j < v.size(); ++j)
            obj["v" + std::to_string(j + 1)] = v[j];
        obj["rho"] = rec->norm.rho;
        obj["delta"] = rec->norm.delta;
        obj["k"] = rec->norm.k;
        if (rec->partition_witness)
            obj["partition_witness"] = *rec->partition_witness;
        else
            obj["partition_witness"] = nullptr;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string emit_tex(const std::vector<const PencilRecord*>& view, ScanMode mode)
{
    std::ostringstream os;
    for (const auto* rec : view) {
        if (mode == ScanMode::cy) {
            if (!rec->spectra)
                throw std::invalid_argument("TeX of length-5 records requires spectra");
            os << "& " << rec->spectra->chi << " & " << rec->spectra->h11 << " & ( ";
            append_ints(os, rec->w_hat.components(), ", ", false);
            os << " ) & " << rec->deleted_index << " & ( ";
            append_ints(os, rec->w_bar_canonical.components(), ", ", false);
            os << " ) &\\cr\n";
        } else {
            os << "& (";
            append_ints(os, rec->w_hat.components(), ", ", false);
            os << ") & " << rec->deleted_index << " & (";
            append_ints(os, rec->w_bar_canonical.components(), ", ", false);
            os << ") &\\cr\n";
        }
    }
    return os.str();
}

} // namespace

std::string emit_table(const std::vector<PencilRecord>& records, TableFormat format,
                       TableOrdering ordering, ScanMode mode)
{
    mode = mode_of(records, mode);
    const auto view = ordered_view(records, ordering);
    switch (format) {
    case TableFormat::csv:
        return emit_csv(view, mode);
    case TableFormat::json:
        return emit_json(view, mode);
    case TableFormat::tex:
        return emit_tex(view, mode);
    }
    throw std::invalid_argument("unknown table format");
}

std::vector<PencilRecord> read_records_json(std::istream& in)
{
    nlohmann::json arr = nlohmann::json::parse(in);
    if (!arr.is_array())
        throw std::runtime_error("records json: top level must be an array");

    std::vector<PencilRecord> records;
    for (const auto& obj : arr) {
        const std::size_t n = obj.contains("w5") ? 5 : 4;
        std::vector<Int> w;
        for (std::size_t j = 1; j <= n; ++j)
            w.push_back(obj.at("w" + std::to_string(j)).get<Int>());
        WeightVector w_hat(std::move(w));
        const int i = obj.at("i").get<int>();

        WeightVector reduced = w_hat.without_slot(i);
        NormalizationData norm = normalize(reduced);
        if (obj.at("rho").get<std::vector<Int>>() != norm.rho ||
            obj.at("delta").get<std::vector<Int>>() != norm.delta ||
            obj.at("k").get<Int>() != norm.k)
            throw std::runtime_error("records json: stored normalization data is inconsistent");

        std::vector<Int> v;
        for (std::size_t j = 1; j <= n - 1; ++j)
            v.push_back(obj.at("v" + std::to_string(j)).get<Int>());
        WeightVector w_bar_canonical(std::move(v));
        if (w_bar_canonical != canonical_form(norm.normalized))
            throw std::runtime_error("records json: stored w_bar is inconsistent");

        std::optional<std::vector<Int>> witness;
        if (obj.contains("partition_witness") && !obj.at("partition_witness").is_null())
            witness = obj.at("partition_witness").get<std::vector<Int>>();

        std::optional<HodgePair> spectra;
        if (obj.contains("euler") && obj.contains("h11")) {
            const Int chi = obj.at("euler").get<Int>();
            const Int h11 = obj.at("h11").get<Int>();
            if (chi % 2 != 0)
                throw std::runtime_error("records json: odd Euler characteristic");
            spectra = HodgePair{h11, h11 - chi / 2, chi};
        }

        records.push_back(PencilRecord{std::move(w_hat), i, std::move(reduced), std::move(norm),
                                       std::move(w_bar_canonical), std::move(witness), spectra});
    }
    return records;
}

std::vector<PencilRecord> load_records_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_records_json(in);
}

} // namespace k3scan
