// Command-line front end: analyze, generate, search, records, integrate,
// verify-ds, hadamard-scan, run-suite. Every run emits exactly one envelope
// on stdout (JSON with sorted keys by default; --format csv/pm emit the raw
// payload instead); diagnostics go to stderr. Exit codes: 0 success,
// 1 assertion/tolerance failure, 2 usage/parse error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/designs.hpp"
#include "seqmerit/errors.hpp"
#include "seqmerit/families.hpp"
#include "seqmerit/json_io.hpp"
#include "seqmerit/merit.hpp"
#include "seqmerit/quadrature.hpp"
#include "seqmerit/search.hpp"
#include "seqmerit/sequence.hpp"

namespace {

using nlohmann::json;
using namespace seqmerit;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct Envelope {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    bool timestamps = false;

    void print() const
    {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["result"] = result;
        j["warnings"] = warnings;
        if (timestamps) {
            const auto now = std::chrono::system_clock::now();
            j["timestamp"] =
                std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
        }
        std::cout << j.dump(2) << '\n';
    }
};

// The guard ceiling for search-style commands: the built-in default unless
// SEQMERIT_MAX_N raises it.
bool guard_allows(int n, int built_in_limit)
{
    if (n <= built_in_limit) {
        return true;
    }
    if (const char* raw = std::getenv("SEQMERIT_MAX_N")) {
        try {
            return n <= std::stoi(raw);
        } catch (const std::exception&) {
            throw ParseError("SEQMERIT_MAX_N must be an integer");
        }
    }
    return false;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Sequence load_sequence(const std::string& inline_text, const std::string& file)
{
    if (!inline_text.empty() && !file.empty()) {
        throw ParseError("give the sequence inline or via --file, not both");
    }
    if (!inline_text.empty()) {
        return parse_sequence_text(inline_text);
    }
    if (!file.empty()) {
        return parse_sequence_text(read_file(file));
    }
    throw ParseError("no sequence given (inline argument or --file)");
}

json complex_pairs(const std::vector<std::complex<double>>& values)
{
    auto array = json::array();
    for (const auto& v : values) {
        array.push_back({v.real(), v.imag()});
    }
    return array;
}

json rational_json(const Rational& r)
{
    json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["text"] = to_string(r);
    j["value"] = boost::rational_cast<double>(r);
    return j;
}

std::string format_double(double v)
{
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
    std::string sequence_text;
    std::string file;
    std::string format = "json";
    int spectrum_samples = 0;
    std::optional<int> qmc_nodes;
};

int run_analyze(const AnalyzeOptions& options, Envelope& envelope)
{
    const Sequence s = load_sequence(options.sequence_text, options.file);
    const auto profile = AutocorrelationProfile::of(s);
    const auto report = make_merit_report(s, options.qmc_nodes);

    envelope.inputs["sequence"] = json::parse(sequence_to_json_text(s));
    envelope.inputs["format"] = options.format;

    if (options.format == "csv") {
        if (options.spectrum_samples > 0) {
            std::cout << "x,power2,power4\n";
            std::ostringstream row;
            row.precision(17);
            for (int j = 0; j < options.spectrum_samples; ++j) {
                const double x = static_cast<double>(j) / options.spectrum_samples;
                const double p2 = spectrum_at(s, x);
                row.str("");
                row << x << ',' << p2 << ',' << p2 * p2 << '\n';
                std::cout << row.str();
            }
        } else {
            std::cout << profile.to_csv();
        }
        return kExitOk;
    }

    json result;
    result["n"] = static_cast<int>(s.length());
    result["alphabet"] = alphabet_name(s.alphabet(), s.root_order());
    if (s.is_binary()) {
        result["pm"] = render_pm_string(s);
    }
    result["aperiodic"] = complex_pairs(profile.aperiodic);
    result["periodic"] = complex_pairs(profile.periodic);
    result["peak"] = profile.peak;
    result["max_sidelobe"] = profile.max_sidelobe;
    result["merit"] = json::parse(to_json_text(report));
    result["is_perfect"] = is_perfect(s);
    if (s.is_binary() && s.length() >= 2) {
        const auto two_level = two_level_gamma(s);
        result["two_level"] = two_level.two_level;
        if (two_level.two_level) {
            result["two_level_gamma"] = two_level.gamma;
        } else {
            result["two_level_rejection"] = two_level.rejection_reason;
        }
        result["unit_aperiodic_sidelobes"] = has_unit_aperiodic_sidelobes(s);
    }
    if (options.spectrum_samples > 0) {
        auto samples = json::array();
        for (int j = 0; j < options.spectrum_samples; ++j) {
            const double x = static_cast<double>(j) / options.spectrum_samples;
            const double p2 = spectrum_at(s, x);
            samples.push_back({x, p2, p2 * p2});
        }
        result["spectrum_samples"] = std::move(samples);
    }
    envelope.result = std::move(result);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
    std::string family;
    int parameter = 0;
    std::string format = "json";
};

int run_generate(const GenerateOptions& options, Envelope& envelope)
{
    const Sequence s = make_family({options.family, options.parameter});
    envelope.inputs["family"] = options.family;
    envelope.inputs["parameter"] = options.parameter;

    if (options.format == "pm") {
        if (!s.is_binary()) {
            throw ParseError("--format pm requires a binary family");
        }
        std::cout << render_pm_string(s) << '\n';
        return kExitOk;
    }
    json result;
    result["n"] = static_cast<int>(s.length());
    result["alphabet"] = alphabet_name(s.alphabet(), s.root_order());
    result["sequence"] = json::parse(sequence_to_json_text(s));
    if (s.is_binary()) {
        result["pm"] = render_pm_string(s);
    }
    envelope.result = std::move(result);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchOptions {
    int n = 0;
    double bound = 0.0;
    std::string mode = "enumerate";
    bool symmetry = false;
    bool allow_large = false;
    int workers = 0;
    std::string format = "json";
};

int run_search(const SearchOptions& options, Envelope& envelope)
{
    SearchSpec spec;
    spec.n = options.n;
    spec.c = options.bound;
    spec.mode = options.mode == "count" ? SearchMode::Count : SearchMode::Enumerate;
    spec.symmetry_reduction = options.symmetry;
    spec.allow_large = options.allow_large || guard_allows(options.n, 34);
    spec.workers = options.workers;

    const auto result = enumerate_bounded(spec);

    envelope.inputs["n"] = options.n;
    envelope.inputs["bound"] = options.bound;
    envelope.inputs["mode"] = options.mode;
    envelope.inputs["symmetry"] = options.symmetry;

    if (options.format == "pm") {
        if (spec.mode == SearchMode::Count) {
            std::cout << result.count << '\n';
        } else {
            for (const auto& s : result.sequences) {
                std::cout << render_pm_string(s) << '\n';
            }
        }
        return kExitOk;
    }
    json payload;
    payload["count"] = result.count;
    if (spec.mode != SearchMode::Count) {
        auto list = json::array();
        for (const auto& s : result.sequences) {
            list.push_back(render_pm_string(s));
        }
        payload["sequences"] = std::move(list);
        if (options.symmetry) {
            auto orbit_sizes = json::array();
            for (const auto& s : result.sequences) {
                orbit_sizes.push_back(symmetry_orbit(s).size());
            }
            payload["orbit_sizes"] = std::move(orbit_sizes);
        }
    }
    envelope.result = std::move(payload);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- records

struct RecordsOptions {
    int max_n = 16;
    bool allow_large = false;
    std::string format = "json";
};

int run_records(const RecordsOptions& options, Envelope& envelope)
{
    const bool allow = options.allow_large || guard_allows(options.max_n, 24);
    const auto records = merit_records(options.max_n, allow);

    envelope.inputs["max_n"] = options.max_n;
    if (options.format == "csv") {
        std::cout << "n,F_num,F_den,witness\n";
        for (const auto& record : records) {
            std::cout << record.n << ',' << record.best_merit.numerator() << ','
                      << record.best_merit.denominator() << ',' << render_pm_string(record.witness)
                      << '\n';
        }
        return kExitOk;
    }
    auto rows = json::array();
    for (const auto& record : records) {
        json row;
        row["n"] = record.n;
        row["merit"] = rational_json(record.best_merit);
        row["sidelobe_energy"] = record.sidelobe_energy;
        row["witness"] = render_pm_string(record.witness);
        rows.push_back(std::move(row));
    }
    envelope.result["records"] = std::move(rows);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- integrate

struct IntegrateOptions {
    std::string sequence_text;
    std::string file;
    std::string method = "exact";
    std::string generator = "golden";
    int nodes = 10000;
    int samples = 0;
    std::string format = "json";
};

int run_integrate(const IntegrateOptions& options, Envelope& envelope)
{
    const Sequence s = load_sequence(options.sequence_text, options.file);
    QuadratureResult quad;
    if (options.method == "exact") {
        quad = exact_l4_result(s);
    } else if (options.method == "qmc") {
        const NodeSet nodes = options.generator == "equispaced"
            ? NodeSet::equispaced(options.nodes)
            : NodeSet::golden_ratio(options.nodes);
        quad = qmc_l4_integral(s, nodes);
    } else {
        throw ParseError("--method must be exact or qmc");
    }

    envelope.inputs["sequence"] = json::parse(sequence_to_json_text(s));
    envelope.inputs["method"] = options.method;
    if (options.method == "qmc") {
        envelope.inputs["generator"] = options.generator;
        envelope.inputs["nodes"] = options.nodes;
    }

    if (options.format == "csv") {
        // Plot-ready samples of the integrand.
        const int count = options.samples > 0 ? options.samples : 256;
        std::cout << "x,power4\n";
        std::ostringstream row;
        row.precision(17);
        for (int j = 0; j < count; ++j) {
            const double x = static_cast<double>(j) / count;
            const double p2 = std::norm(fourier_eval(s, x));
            row.str("");
            row << x << ',' << p2 * p2 << '\n';
            std::cout << row.str();
        }
        return kExitOk;
    }
    json result;
    result["value"] = quad.value;
    result["method"] = method_name(quad.method);
    result["N"] = quad.node_count;
    result["error_bound"] = quad.error_bound;
    if (quad.method == QuadratureMethod::Qmc) {
        result["discrepancy"] = quad.discrepancy;
        result["variation_bound"] = quad.variation_bound;
        if (quad.sampled_variation) {
            result["sampled_variation"] = *quad.sampled_variation;
        }
    }
    if (options.samples > 0) {
        auto samples = json::array();
        for (int j = 0; j < options.samples; ++j) {
            const double x = static_cast<double>(j) / options.samples;
            const double p2 = std::norm(fourier_eval(s, x));
            samples.push_back({x, p2 * p2});
        }
        result["samples"] = std::move(samples);
    }
    envelope.result = std::move(result);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- verify-ds

struct VerifyDsOptions {
    std::string set_text;
    int v = 0;
};

int run_verify_ds(const VerifyDsOptions& options, Envelope& envelope)
{
    std::vector<int> members;
    std::stringstream stream(options.set_text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t consumed = 0;
            members.push_back(std::stoi(token, &consumed));
            if (consumed != token.size()) {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::exception&) {
            throw ParseError("--set must be a comma-separated list of integers");
        }
    }
    if (members.empty()) {
        throw ParseError("--set must name at least one residue");
    }
    const auto check = verify_difference_set(members, options.v);

    envelope.inputs["set"] = members;
    envelope.inputs["v"] = options.v;
    json result;
    result["v"] = options.v;
    result["verified"] = check.verified;
    if (check.verified) {
        result["k"] = check.set->k;
        result["lambda"] = check.set->lambda;
        result["characteristic"] = render_pm_string(characteristic_sequence(*check.set));
    } else {
        result["k"] = static_cast<int>(members.size());
        result["lambda"] = nullptr;
        result["rejection"] = check.rejection_reason;
    }
    envelope.result = std::move(result);
    envelope.print();
    return kExitOk;
}

// ------------------------------------------------------------ hadamard-scan

struct HadamardScanOptions {
    int n = 0;
    bool allow_large = false;
};

int run_hadamard_scan(const HadamardScanOptions& options, Envelope& envelope)
{
    const bool allow = options.allow_large || guard_allows(options.n, 20);
    const auto scan = hadamard_scan(options.n, allow);

    envelope.inputs["n"] = options.n;
    json result;
    result["n"] = scan.n;
    result["rows_scanned"] = scan.rows_scanned;
    result["perfect_count"] = static_cast<long long>(scan.perfect_rows.size());
    auto rows = json::array();
    for (const auto& row : scan.perfect_rows) {
        rows.push_back(render_pm_string(row));
    }
    result["perfect_rows"] = std::move(rows);
    envelope.result = std::move(result);
    envelope.print();
    return kExitOk;
}

// ---------------------------------------------------------------- run-suite

struct SuiteOptions {
    std::string name;
    int max_n = 16;
    std::string format = "json";
};

struct SuiteOutcome {
    json rows = json::array();
    std::vector<std::string> csv_lines;
    std::vector<std::string> failures;
};

SuiteOutcome barker_table_suite()
{
    SuiteOutcome outcome;
    outcome.csv_lines.push_back("n,max_sidelobe,l4_fourth,l4_predicted,merit,merit_predicted,ok");
    for (int n : barker_lengths()) {
        const auto s = barker(n);
        const auto signs = s.signs();
        const long long sidelobe = max_sidelobe(std::span<const int>(signs));
        const long long l4 = l4_norm_fourth_exact(s);
        const long long l4_predicted = barker_l4_prediction(n);
        const Rational merit = merit_factor_discrete_exact(s);
        const Rational merit_predicted = barker_merit_prediction(n);
        const bool ok = sidelobe <= 1 && l4 == l4_predicted && merit == merit_predicted;
        json row;
        row["n"] = n;
        row["max_sidelobe"] = sidelobe;
        row["l4_fourth"] = l4;
        row["l4_predicted"] = l4_predicted;
        row["merit"] = rational_json(merit);
        row["merit_predicted"] = rational_json(merit_predicted);
        row["ok"] = ok;
        outcome.rows.push_back(std::move(row));
        std::ostringstream line;
        line << n << ',' << sidelobe << ',' << l4 << ',' << l4_predicted << ','
             << to_string(merit) << ',' << to_string(merit_predicted) << ','
             << (ok ? "true" : "false");
        outcome.csv_lines.push_back(line.str());
        if (!ok) {
            outcome.failures.push_back("barker-table row n=" + std::to_string(n));
        }
    }
    return outcome;
}

SuiteOutcome minimal_table_suite(int max_n)
{
    SuiteOutcome outcome;
    outcome.csv_lines.push_back("n,all_ones_merit,alternating_merit,predicted,ok");
    for (int n = 2; n <= max_n; ++n) {
        const Rational ones = merit_factor_discrete_exact(all_ones(n));
        const Rational alt = merit_factor_discrete_exact(alternating(n));
        const Rational predicted = minimal_merit_factor(n);
        const bool ok = ones == predicted && alt == predicted;
        json row;
        row["n"] = n;
        row["all_ones_merit"] = rational_json(ones);
        row["alternating_merit"] = rational_json(alt);
        row["predicted"] = rational_json(predicted);
        row["ok"] = ok;
        outcome.rows.push_back(std::move(row));
        std::ostringstream line;
        line << n << ',' << to_string(ones) << ',' << to_string(alt) << ','
             << to_string(predicted) << ',' << (ok ? "true" : "false");
        outcome.csv_lines.push_back(line.str());
        if (!ok) {
            outcome.failures.push_back("minimal-table row n=" + std::to_string(n));
        }
    }
    return outcome;
}

SuiteOutcome qmc_convergence_suite()
{
    SuiteOutcome outcome;
    outcome.csv_lines.push_back("nodes,estimate,exact,abs_error,error_bound,ok");
    const auto s = barker(13);
    const double exact = exact_l4_integral(s);
    for (int nodes : {1000, 10000, 100000}) {
        const auto quad = qmc_l4_integral(s, NodeSet::golden_ratio(nodes));
        const double abs_error = std::abs(quad.value - exact);
        const bool ok = abs_error <= quad.error_bound;
        json row;
        row["nodes"] = nodes;
        row["estimate"] = quad.value;
        row["exact"] = exact;
        row["abs_error"] = abs_error;
        row["error_bound"] = quad.error_bound;
        row["ok"] = ok;
        outcome.rows.push_back(std::move(row));
        std::ostringstream line;
        line.precision(17);
        line << nodes << ',' << quad.value << ',' << exact << ',' << abs_error << ','
             << quad.error_bound << ',' << (ok ? "true" : "false");
        outcome.csv_lines.push_back(line.str());
        if (!ok) {
            outcome.failures.push_back("qmc-convergence row nodes=" + std::to_string(nodes));
        }
    }
    return outcome;
}

int run_suite(const SuiteOptions& options, Envelope& envelope)
{
    SuiteOutcome outcome;
    if (options.name == "barker-table") {
        outcome = barker_table_suite();
    } else if (options.name == "minimal-table") {
        outcome = minimal_table_suite(options.max_n);
    } else if (options.name == "qmc-convergence") {
        outcome = qmc_convergence_suite();
    } else {
        throw ParseError("unknown suite '" + options.name
                         + "' (expected barker-table, minimal-table, or qmc-convergence)");
    }

    envelope.inputs["suite"] = options.name;
    for (const auto& failure : outcome.failures) {
        std::cerr << "FAILED: " << failure << '\n';
    }
    if (options.format == "csv") {
        for (const auto& line : outcome.csv_lines) {
            std::cout << line << '\n';
        }
        return outcome.failures.empty() ? kExitOk : kExitFailedCheck;
    }
    envelope.result["rows"] = std::move(outcome.rows);
    envelope.result["passed"] = outcome.failures.empty();
    envelope.print();
    return outcome.failures.empty() ? kExitOk : kExitFailedCheck;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Autocorrelation, merit-factor, and L4-norm toolkit for binary and "
                 "polyphase sequences"};
    app.require_subcommand(1);
    bool timestamps = false;
    app.add_flag("--timestamps", timestamps,
                 "include a timestamp in the envelope (off by default for reproducible output)");

    AnalyzeOptions analyze_options;
    auto* analyze = app.add_subcommand(
        "analyze", "autocorrelation profile, merit factor, and structure predicates");
    analyze->add_option("sequence", analyze_options.sequence_text,
                        "sequence as '+'/'-' text or JSON");
    analyze->add_option("--file", analyze_options.file, "read the sequence from a file");
    analyze->add_option("--format", analyze_options.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--spectrum-samples", analyze_options.spectrum_samples,
                        "emit M plot-ready samples of (x, |f|^2, |f|^4)");
    analyze->add_option("--qmc-nodes", analyze_options.qmc_nodes,
                        "also compute the merit factor through qmc quadrature with N golden nodes");

    GenerateOptions generate_options;
    auto* generate = app.add_subcommand("generate", "emit a named sequence family member");
    generate->add_option("family", generate_options.family,
                         "all-ones|alternating|barker|legendre|chirp|turyn-perfect")
        ->required();
    generate->add_option("parameter", generate_options.parameter, "length / prime / odd length")
        ->required();
    generate->add_option("--format", generate_options.format, "json|pm")
        ->check(CLI::IsMember({"json", "pm"}));

    SearchOptions search_options;
    auto* search = app.add_subcommand(
        "search", "enumerate binary sequences with bounded aperiodic sidelobes");
    search->add_option("--n", search_options.n, "sequence length")->required();
    search->add_option("--bound", search_options.bound, "sidelobe bound c")->required();
    search->add_option("--mode", search_options.mode, "enumerate|count")
        ->check(CLI::IsMember({"enumerate", "count"}));
    search->add_flag("--symmetry", search_options.symmetry,
                     "report canonical orbit representatives and orbit-weighted count");
    search->add_flag("--allow-large", search_options.allow_large,
                     "override the n > 34 guard (also via SEQMERIT_MAX_N)");
    search->add_option("--workers", search_options.workers, "worker threads (0 = hardware)");
    search->add_option("--format", search_options.format, "json|pm")
        ->check(CLI::IsMember({"json", "pm"}));

    RecordsOptions records_options;
    auto* records = app.add_subcommand("records", "best merit factor per length with witnesses");
    records->add_option("--max-n", records_options.max_n, "largest length (default 16)");
    records->add_flag("--allow-large", records_options.allow_large,
                      "override the max-n > 24 guard (also via SEQMERIT_MAX_N)");
    records->add_option("--format", records_options.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    IntegrateOptions integrate_options;
    auto* integrate = app.add_subcommand("integrate", "L4 integral by exact or qmc quadrature");
    integrate->add_option("sequence", integrate_options.sequence_text,
                          "sequence as '+'/'-' text or JSON");
    integrate->add_option("--file", integrate_options.file, "read the sequence from a file");
    integrate->add_option("--method", integrate_options.method, "exact|qmc")
        ->check(CLI::IsMember({"exact", "qmc"}));
    integrate->add_option("--generator", integrate_options.generator, "golden|equispaced")
        ->check(CLI::IsMember({"golden", "equispaced"}));
    integrate->add_option("--nodes", integrate_options.nodes, "qmc node count (default 10000)");
    integrate->add_option("--samples", integrate_options.samples,
                          "emit M integrand samples for plotting");
    integrate->add_option("--format", integrate_options.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyDsOptions verify_options;
    auto* verify = app.add_subcommand("verify-ds", "verify a cyclic difference set");
    verify->add_option("--set", verify_options.set_text, "comma-separated residues")->required();
    verify->add_option("--v", verify_options.v, "modulus")->required();

    HadamardScanOptions scan_options;
    auto* scan = app.add_subcommand("hadamard-scan",
                                    "exhaustively scan binary rows for perfect ones");
    scan->add_option("--n", scan_options.n, "row length")->required();
    scan->add_flag("--allow-large", scan_options.allow_large,
                   "override the n > 20 guard (also via SEQMERIT_MAX_N)");

    SuiteOptions suite_options;
    auto* suite = app.add_subcommand("run-suite", "reproduce a named results table");
    suite->add_option("name", suite_options.name, "barker-table|minimal-table|qmc-convergence")
        ->required();
    suite->add_option("--max-n", suite_options.max_n, "minimal-table upper length (default 16)");
    suite->add_option("--format", suite_options.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Envelope envelope;
    envelope.timestamps = timestamps;
    try {
        if (*analyze) {
            envelope.command = "analyze";
            return run_analyze(analyze_options, envelope);
        }
        if (*generate) {
            envelope.command = "generate";
            return run_generate(generate_options, envelope);
        }
        if (*search) {
            envelope.command = "search";
            return run_search(search_options, envelope);
        }
        if (*records) {
            envelope.command = "records";
            return run_records(records_options, envelope);
        }
        if (*integrate) {
            envelope.command = "integrate";
            return run_integrate(integrate_options, envelope);
        }
        if (*verify) {
            envelope.command = "verify-ds";
            return run_verify_ds(verify_options, envelope);
        }
        if (*scan) {
            envelope.command = "hadamard-scan";
            return run_hadamard_scan(scan_options, envelope);
        }
        if (*suite) {
            envelope.command = "run-suite";
            return run_suite(suite_options, envelope);
        }
        std::cerr << "no command selected\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RouteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailedCheck;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitFailedCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailedCheck;
    }
}
