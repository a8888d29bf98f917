// k3scan: pencil scanner for Calabi-Yau weight systems.
//
// Subcommands: normalize, monomials, transversal, scan, enumerate, hodge,
// verify, emit. Exit codes: 0 success / all-match, 1 verification
// discrepancies, 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3scan/errors.hpp"
#include "k3scan/hodge.hpp"
#include "k3scan/monomials.hpp"
#include "k3scan/pencilscan.hpp"
#include "k3scan/report.hpp"
#include "k3scan/transversality.hpp"
#include "k3scan/weights.hpp"

using namespace k3scan;

namespace {

std::string joined(const std::vector<Int>& v, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t j = 0; j < v.size(); ++j)
        os << (j ? sep : "") << v[j];
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

TableFormat parse_format(const std::string& name)
{
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    if (name == "tex")
        return TableFormat::tex;
    throw CLI::ValidationError("--format must be csv, json or tex");
}

TableOrdering parse_ordering(const std::string& name)
{
    if (name == "input")
        return TableOrdering::input;
    if (name == "appendix")
        return TableOrdering::appendix;
    throw CLI::ValidationError("--ordering must be input or appendix");
}

std::vector<WeightVector> read_weights_file(const std::string& path, std::size_t length)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<WeightVector> weights;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        for (auto& ch : line)
            if (ch == ',')
                ch = ' ';
        std::istringstream fields(line);
        std::vector<Int> c;
        Int value;
        while (fields >> value)
            c.push_back(value);
        if (c.empty())
            continue;
        if (c.size() != length)
            throw ParseError("expected " + std::to_string(length) + " weights", line_number);
        weights.emplace_back(std::move(c));
    }
    return weights;
}

// spectra for length-5 records, one Hodge computation per distinct w_hat
void attach_spectra(std::vector<PencilRecord>& records)
{
    spectrum_self_test();
    std::map<std::vector<Int>, HodgePair> cache;
    for (auto& rec : records) {
        auto it = cache.find(rec.w_hat.components());
        if (it == cache.end())
            it = cache.emplace(rec.w_hat.components(), hodge_numbers(rec.w_hat)).first;
        rec.spectra = it->second;
    }
}

const char* status_name(RowStatus status)
{
    switch (status) {
    case RowStatus::match:
        return "MATCH";
    case RowStatus::missing:
        return "MISSING";
    case RowStatus::extra:
        return "EXTRA";
    case RowStatus::mismatch:
        return "MISMATCH";
    }
    return "?";
}

int print_report(const VerificationReport& report, const std::string& out_path)
{
    std::ostringstream os;
    for (const auto& row : report.rows)
        os << status_name(row.status) << " " << row.detail << "\n";
    os << "summary: " << report.matches << " match, " << report.missing << " missing, "
       << report.extras << " extra, " << report.mismatches << " mismatch\n";
    write_output(os.str(), out_path);
    return report.all_match() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pencil-of-K3 scanner for weighted projective Calabi-Yau hypersurfaces"};
    app.require_subcommand(1);

    int jobs = 1;
    std::string out_path;
    app.add_option("--jobs", jobs, "worker threads for batch scans")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // normalize
    auto* cmd_normalize = app.add_subcommand("normalize", "normalization data of a weight vector");
    std::vector<Int> norm_w;
    cmd_normalize->add_option("weights", norm_w, "weight components")->required()->expected(-2);

    // monomials
    auto* cmd_monomials = app.add_subcommand("monomials", "compatible exponent vectors");
    std::vector<Int> mono_w;
    Int mono_degree = 0;
    std::vector<int> mono_zero;
    cmd_monomials->add_option("weights", mono_w, "weight components")->required()->expected(-2);
    cmd_monomials->add_option("--degree", mono_degree, "target weighted degree")->required();
    cmd_monomials->add_option("--zero", mono_zero, "1-based slots forced to zero");

    // transversal
    auto* cmd_transversal = app.add_subcommand("transversal", "quasi-smoothness test");
    std::vector<Int> trans_w;
    std::optional<Int> trans_degree;
    cmd_transversal->add_option("weights", trans_w, "weight components")->required()->expected(-2);
    cmd_transversal->add_option("--degree", trans_degree,
                                "hypersurface degree (default: weight sum)");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "find pencil records for weight systems");
    std::vector<Int> scan_w;
    std::string scan_file;
    bool scan_k3 = false;
    bool scan_no_spectra = false;
    std::string scan_format = "csv";
    std::string scan_ordering = "input";
    cmd_scan->add_option("weights", scan_w, "a single weight system");
    cmd_scan->add_option("--weights-file", scan_file, "file with one weight system per line");
    cmd_scan->add_flag("--k3", scan_k3, "length-4 mode (elliptic pencils in K3s)");
    cmd_scan->add_flag("--no-spectra", scan_no_spectra, "skip Hodge numbers (JSON output only)");
    cmd_scan->add_option("--format", scan_format, "csv, json or tex")->capture_default_str();
    cmd_scan->add_option("--ordering", scan_ordering, "input or appendix")->capture_default_str();

    // enumerate
    auto* cmd_enumerate = app.add_subcommand("enumerate", "well-formed transversal CY systems");
    int enum_length = 4;
    Int enum_dmax = 0;
    cmd_enumerate->add_option("--length", enum_length, "3, 4 or 5")->required();
    cmd_enumerate->add_option("--dmax", enum_dmax, "degree bound")->required();

    // hodge
    auto* cmd_hodge = app.add_subcommand("hodge", "Hodge numbers and Euler characteristic");
    std::vector<Int> hodge_w;
    cmd_hodge->add_option("weights", hodge_w, "five weight components")->required()->expected(-2);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "compare scan output against a golden table");
    std::string verify_golden;
    bool verify_k3 = false;
    Int verify_dmax = 84;
    cmd_verify->add_option("--golden", verify_golden, "golden CSV path")->required();
    cmd_verify->add_flag("--k3", verify_k3, "K3 mode: closure of the length-4 enumeration");
    cmd_verify->add_option("--dmax", verify_dmax, "enumeration bound for --k3")
        ->capture_default_str();

    // emit
    auto* cmd_emit = app.add_subcommand("emit", "re-emit a records JSON file");
    std::string emit_in;
    std::string emit_format = "csv";
    std::string emit_ordering = "input";
    cmd_emit->add_option("--in", emit_in, "records JSON (as written by scan --format json)")
        ->required();
    cmd_emit->add_option("--format", emit_format, "csv, json or tex")->capture_default_str();
    cmd_emit->add_option("--ordering", emit_ordering, "input or appendix")->capture_default_str();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_normalize->parsed()) {
            const WeightVector w(norm_w);
            const auto n = normalize(w);
            std::ostringstream os;
            os << "w=" << joined(w.components()) << "\n"
               << "d=" << w.degree() << "\n"
               << "rho=" << joined(n.rho) << "\n"
               << "delta=" << joined(n.delta) << "\n"
               << "k=" << n.k << "\n"
               << "w_bar=" << joined(n.normalized.components()) << "\n"
               << "d_bar=" << n.reduced_degree << "\n";
            write_output(os.str(), out_path);
            return 0;
        }

        if (cmd_monomials->parsed()) {
            const WeightVector w(mono_w);
            std::ostringstream os;
            for (const auto& nu : enumerate_compatible(w, mono_degree, mono_zero))
                os << joined(nu, " ") << "\n";
            write_output(os.str(), out_path);
            return 0;
        }

        if (cmd_transversal->parsed()) {
            const WeightVector w(trans_w);
            const Int d = trans_degree.value_or(w.degree());
            write_output(is_transversal(w, d) ? "true\n" : "false\n", out_path);
            return 0;
        }

        if (cmd_scan->parsed()) {
            const std::size_t length = scan_k3 ? 4 : 5;
            std::vector<WeightVector> inputs;
            if (!scan_file.empty())
                inputs = read_weights_file(scan_file, length);
            if (!scan_w.empty())
                inputs.emplace_back(scan_w);
            if (inputs.empty())
                throw CLI::ValidationError("scan needs weights or --weights-file");

            auto batch = scan_list(inputs, scan_k3 ? ScanMode::k3 : ScanMode::cy, jobs);
            for (const auto& failure : batch.failures)
                std::cerr << "skip input " << failure.input_index + 1 << ": "
                          << failure.message << "\n";
            if (!scan_k3 && !scan_no_spectra)
                attach_spectra(batch.records);
            write_output(emit_table(batch.records, parse_format(scan_format),
                                    parse_ordering(scan_ordering),
                                    scan_k3 ? ScanMode::k3 : ScanMode::cy),
                         out_path);
            return batch.failures.empty() ? 0 : 1;
        }

        if (cmd_enumerate->parsed()) {
            std::ostringstream os;
            for (const auto& system : enumerate_cy_weight_systems(enum_length, enum_dmax))
                os << joined(system.weights.components()) << "\n";
            write_output(os.str(), out_path);
            return 0;
        }

        if (cmd_hodge->parsed()) {
            spectrum_self_test();
            const WeightVector w(hodge_w);
            const auto h = hodge_numbers(w);
            std::ostringstream os;
            os << "h11=" << h.h11 << " h21=" << h.h21 << " chi=" << h.chi
               << " convention=" << spectrum_convention() << "\n";
            write_output(os.str(), out_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (verify_k3) {
                const auto golden = load_golden_k3(verify_golden);
                std::vector<WeightVector> inputs;
                for (const auto& system : enumerate_cy_weight_systems(4, verify_dmax))
                    inputs.push_back(system.weights);
                const auto batch = scan_list(inputs, ScanMode::k3, jobs);
                return print_report(verify_against_golden(batch.records, golden), out_path);
            }
            const auto golden = load_golden_cy(verify_golden);
            std::vector<WeightVector> inputs;
            std::set<std::vector<Int>> seen;
            for (const auto& row : golden)
                if (seen.insert({row.w_hat.begin(), row.w_hat.end()}).second)
                    inputs.emplace_back(std::vector<Int>(row.w_hat.begin(), row.w_hat.end()));
            auto batch = scan_list(inputs, ScanMode::cy, jobs);
            for (const auto& failure : batch.failures)
                std::cerr << "skip input " << failure.input_index + 1 << ": "
                          << failure.message << "\n";
            attach_spectra(batch.records);
            return print_report(verify_against_golden(batch.records, golden), out_path);
        }

        if (cmd_emit->parsed()) {
            const auto records = load_records_json(emit_in);
            write_output(emit_table(records, parse_format(emit_format),
                                    parse_ordering(emit_ordering)),
                         out_path);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
