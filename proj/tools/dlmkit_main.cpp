// dlmkit command line: exact distance-Laplacian spectra, graph family
// emission, connected-graph enumeration and verification sweeps. Talks to
// the shared library exclusively through the public C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dlmkit.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* p) const { dlm_string_free(p); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(dlm_graph* g) const { dlm_graph_free(g); }
};
using GraphPtr = std::unique_ptr<dlm_graph, GraphDeleter>;

int fail(int code, const std::string& message) {
    std::cerr << "dlmkit: " << message << '\n';
    return code;
}

int write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return kExitPass;
    }
    std::ofstream f(out_path, std::ios::trunc);
    if (!f) return fail(kExitUsage, "cannot open output file " + out_path);
    f << text;
    return kExitPass;
}

GraphPtr build_family_graph(const std::string& name, int n, int a, int b,
                            const std::vector<int>& parts, int* err) {
    dlm_graph* g = nullptr;
    const dlm_status st = dlm_graph_family(name.c_str(), n, a, b,
                                           parts.empty() ? nullptr : parts.data(), parts.size(),
                                           &g);
    if (st != DLM_OK) {
        *err = fail(kExitUsage, dlm_last_error());
        return nullptr;
    }
    *err = kExitPass;
    return GraphPtr(g);
}

struct SpectrumArgs {
    std::string g6;
    std::string file;
    std::string family;
    int n = 0;
    int a = 0, b = 0;
    std::vector<int> parts;
    std::string matrix = "dl";
    std::string format = "text";
    bool connected_only = false;
    std::string out;
};

int spectrum_status_to_exit(dlm_status st) {
    switch (st) {
        case DLM_OK:
            return kExitPass;
        case DLM_ERR_PARSE:
            return kExitFail; // parse errors exit 1
        case DLM_ERR_DISCONNECTED:
            return kExitUsage; // disconnected input for dl exits 2
        default:
            return kExitUsage;
    }
}

int run_spectrum(const SpectrumArgs& args) {
    int sources = 0;
    if (!args.g6.empty()) ++sources;
    if (!args.file.empty()) ++sources;
    if (!args.family.empty()) ++sources;
    if (sources == 0) return fail(kExitUsage, "spectrum needs --g6, --file or --family");
    if (sources > 1) return fail(kExitUsage, "spectrum takes exactly one input source");

    std::vector<std::pair<std::string, GraphPtr>> graphs; // (label, graph)
    if (!args.g6.empty()) {
        dlm_graph* g = nullptr;
        const dlm_status st = dlm_graph_from_g6(args.g6.c_str(), &g);
        if (st != DLM_OK) return fail(spectrum_status_to_exit(st), dlm_last_error());
        graphs.emplace_back(args.g6, GraphPtr(g));
    } else if (!args.family.empty()) {
        int err = 0;
        GraphPtr g = build_family_graph(args.family, args.n, args.a, args.b, args.parts, &err);
        if (!g) return err;
        graphs.emplace_back(args.family, std::move(g));
    } else {
        std::ifstream file_in;
        std::istream* in = &std::cin;
        if (args.file != "-") {
            file_in.open(args.file);
            if (!file_in) return fail(kExitUsage, "cannot open " + args.file);
            in = &file_in;
        }
        std::string line;
        long lineno = 0;
        while (std::getline(*in, line)) {
            ++lineno;
            if (line.empty()) continue;
            dlm_graph* g = nullptr;
            const dlm_status st = dlm_graph_from_g6(line.c_str(), &g);
            if (st != DLM_OK) {
                return fail(spectrum_status_to_exit(st),
                            "line " + std::to_string(lineno) + ": " + dlm_last_error());
            }
            if (args.connected_only && !dlm_graph_is_connected(g)) {
                dlm_graph_free(g);
                continue;
            }
            graphs.emplace_back(line, GraphPtr(g));
        }
    }

    std::ostringstream out;
    bool csv_header_done = false;
    for (const auto& [label, g] : graphs) {
        dlm_spectrum* s = nullptr;
        const dlm_status st = dlm_spectrum_compute(g.get(), args.matrix.c_str(), &s);
        if (st != DLM_OK) return fail(spectrum_status_to_exit(st), dlm_last_error());
        char* rendered = nullptr;
        const dlm_status rst = dlm_spectrum_render(s, args.format.c_str(), &rendered);
        dlm_spectrum_free(s);
        if (rst != DLM_OK) return fail(kExitUsage, dlm_last_error());
        CStr owned(rendered);
        const bool multi = graphs.size() > 1;
        if (args.format == "text") {
            if (multi) out << label << '\t';
            out << owned.get() << '\n';
        } else if (args.format == "json") {
            out << owned.get() << '\n';
        } else { // csv
            std::string body = owned.get();
            const auto nl = body.find('\n');
            if (!csv_header_done) {
                out << (multi ? "graph6," : "") << body.substr(0, nl) << '\n';
                csv_header_done = true;
            }
            std::istringstream rows(body.substr(nl + 1));
            std::string row;
            while (std::getline(rows, row)) {
                if (row.empty()) continue;
                if (multi) out << label << ',';
                out << row << '\n';
            }
        }
    }
    return write_output(args.out, out.str());
}

int run_enumerate(int n, const std::string& out_path) {
    dlm_graph_iter* it = nullptr;
    if (dlm_enumerate_connected(n, &it) != DLM_OK) return fail(kExitUsage, dlm_last_error());
    std::ostringstream out;
    dlm_graph* g = nullptr;
    while (dlm_graph_iter_next(it, &g)) {
        char* g6 = nullptr;
        dlm_graph_to_g6(g, &g6);
        out << g6 << '\n';
        dlm_string_free(g6);
        dlm_graph_free(g);
    }
    dlm_graph_iter_free(it);
    return write_output(out_path, out.str());
}

int run_family(const std::string& name, int n, int a, int b, const std::vector<int>& parts,
               const std::string& out_path) {
    std::ostringstream out;
    if (name == "classified" || name == "small-n") {
        dlm_graph_iter* it = nullptr;
        const dlm_status st = (name == "classified") ? dlm_family_classified(n, &it)
                                                     : dlm_family_small_n(n, &it);
        if (st != DLM_OK) return fail(kExitUsage, dlm_last_error());
        dlm_graph* g = nullptr;
        while (dlm_graph_iter_next(it, &g)) {
            char* g6 = nullptr;
            dlm_graph_to_g6(g, &g6);
            out << g6 << '\n';
            dlm_string_free(g6);
            dlm_graph_free(g);
        }
        dlm_graph_iter_free(it);
    } else {
        int err = 0;
        GraphPtr g = build_family_graph(name, n, a, b, parts, &err);
        if (!g) return err;
        char* g6 = nullptr;
        dlm_graph_to_g6(g.get(), &g6);
        out << g6 << '\n';
        dlm_string_free(g6);
    }
    return write_output(out_path, out.str());
}

struct VerifyArgs {
    std::string kind;
    int n = 0;
    int max_n = 14;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int samples = 1000;
    int workers = 1;
    std::string corpus;
    bool connected_only = false;
    std::string format = "json";
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    const bool needs_n =
        args.kind == "thm33" || args.kind == "properties" || args.kind == "cospectral";
    if (needs_n && args.n == 0) {
        return fail(kExitUsage, "verify " + args.kind + " needs --n");
    }
    if (args.kind == "properties" && !args.seed_set) {
        return fail(kExitUsage, "sampled suites need an explicit --seed");
    }
    dlm_verify_opts opts{};
    opts.n = args.n;
    opts.max_n = args.max_n;
    opts.seed = args.seed;
    opts.samples = args.samples;
    opts.workers = args.workers;
    opts.corpus_path = args.corpus.empty() ? nullptr : args.corpus.c_str();
    opts.connected_only = args.connected_only ? 1 : 0;
    const char* cache = std::getenv("DLMKIT_CACHE_DIR");
    opts.cache_dir = (cache && *cache) ? cache : nullptr;

    dlm_report* rep = nullptr;
    if (dlm_verify_run(args.kind.c_str(), &opts, &rep) != DLM_OK) {
        return fail(kExitUsage, dlm_last_error());
    }
    char* rendered = nullptr;
    if (dlm_report_render(rep, args.format.c_str(), &rendered) != DLM_OK) {
        dlm_report_free(rep);
        return fail(kExitUsage, dlm_last_error());
    }
    CStr owned(rendered);
    const bool passed = dlm_report_passed(rep) != 0;
    dlm_report_free(rep);
    const int write_rc = write_output(args.out, owned.get());
    if (write_rc != kExitPass) return write_rc;
    return passed ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distance-Laplacian spectra toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dlm_version()));

    SpectrumArgs sp;
    CLI::App* spectrum = app.add_subcommand("spectrum", "print the exact spectrum of a graph");
    spectrum->add_option("--g6", sp.g6, "inline graph6 text");
    spectrum->add_option("--file", sp.file, "graph6 file, '-' for stdin");
    spectrum->add_option("--family", sp.family, "family name (with --n/--a/--b/--parts)");
    spectrum->add_option("--n", sp.n, "family order");
    spectrum->add_option("--a", sp.a, "J(a,b) parameter a");
    spectrum->add_option("--b", sp.b, "J(a,b) parameter b");
    spectrum->add_option("--parts", sp.parts, "multipartite part sizes")->delimiter(',');
    spectrum->add_option("--matrix", sp.matrix, "dl or l")
        ->check(CLI::IsMember({"dl", "l"}));
    spectrum->add_option("--format", sp.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    spectrum->add_flag("--connected-only", sp.connected_only,
                       "skip disconnected graphs in file input");
    spectrum->add_option("--out", sp.out, "write to file instead of stdout");

    int enum_n = 0;
    std::string enum_out;
    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "emit all connected graphs on n vertices as graph6");
    enumerate->add_option("--n", enum_n, "vertex count (2..9)")->required();
    enumerate->add_option("--out", enum_out, "write to file instead of stdout");

    std::string fam_name, fam_out;
    int fam_n = 0, fam_a = 0, fam_b = 0;
    std::vector<int> fam_parts;
    CLI::App* family = app.add_subcommand("family", "emit family graphs as graph6");
    family->add_option("--name", fam_name,
                       "family name, or 'classified' / 'small-n' for the member lists")
        ->required();
    family->add_option("--n", fam_n, "order");
    family->add_option("--a", fam_a, "J(a,b) parameter a");
    family->add_option("--b", fam_b, "J(a,b) parameter b");
    family->add_option("--parts", fam_parts, "multipartite part sizes")->delimiter(',');
    family->add_option("--out", fam_out, "write to file instead of stdout");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps and suites");
    verify->add_option("kind", va.kind, "thm33 | remark45 | formulas | properties | cospectral")
        ->required()
        ->check(CLI::IsMember({"thm33", "remark45", "formulas", "properties", "cospectral"}));
    verify->add_option("--n", va.n, "graph order");
    verify->add_option("--max-n", va.max_n, "largest order for formula checks");
    verify->add_option("--seed", va.seed, "PRNG seed for sampled suites")
        ->each([&va](const std::string&) { va.seed_set = true; });
    verify->add_option("--samples", va.samples, "sample budget for sampled suites");
    verify->add_option("--workers", va.workers, "worker threads");
    verify->add_option("--file", va.corpus, "graph6 corpus instead of built-in enumeration");
    verify->add_flag("--connected-only", va.connected_only,
                     "drop disconnected corpus graphs instead of failing");
    verify->add_option("--format", va.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", va.out, "write to file instead of stdout");

    VerifyArgs ca;
    ca.kind = "cospectral";
    CLI::App* cosp = app.add_subcommand("cospectral", "distance-Laplacian cospectrality sweep");
    cosp->add_option("--n", ca.n, "graph order")->required();
    cosp->add_option("--workers", ca.workers, "worker threads");
    cosp->add_option("--file", ca.corpus, "graph6 corpus instead of built-in enumeration");
    cosp->add_flag("--connected-only", ca.connected_only,
                   "drop disconnected corpus graphs instead of failing");
    cosp->add_option("--format", ca.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cosp->add_option("--out", ca.out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    if (spectrum->parsed()) return run_spectrum(sp);
    if (enumerate->parsed()) return run_enumerate(enum_n, enum_out);
    if (family->parsed()) return run_family(fam_name, fam_n, fam_a, fam_b, fam_parts, fam_out);
    if (verify->parsed()) return run_verify(va);
    if (cosp->parsed()) return run_verify(ca);
    return kExitUsage;
}
