#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/graph_io.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/search.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/suites.hpp"
#include "qwalk/verify.hpp"

namespace qwalk::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    json result;
    json tolerances = json::object();
    int exit_code = kExitOk;
    std::string summary;
};

class Inputs {
public:
    explicit Inputs(std::istream& in) : in_(in) {}

    std::string read(const std::string& path) {
        std::string text;
        if (path == "-") {
            std::ostringstream buf;
            buf << in_.rdbuf();
            text = buf.str();
        } else {
            std::ifstream file(path, std::ios::binary);
            if (!file) throw InputError("cannot open " + path);
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        digest_ = fnv1a64(text, digest_);
        return text;
    }

    Graph graph(const std::string& path, const std::string& format) {
        const std::string text = read(path);
        const GraphFormat f = format == "auto" ? detect_format(text) : parse_format_name(format);
        return parse_graph(text, f);
    }

    std::istream& stream() { return in_; }
    void absorb(std::string_view data) { digest_ = fnv1a64(data, digest_); }
    std::uint64_t digest() const { return digest_; }

private:
    std::istream& in_;
    std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

void check_vertex(const Graph& g, Vertex v, const char* name) {
    if (v >= g.size())
        throw InputError(std::string("vertex ") + name + "=" + std::to_string(v) + " out of range for " +
                         std::to_string(g.size()) + " vertices");
}

void require_integer(const Graph& g) {
    if (!g.integer_weights()) throw InputError("exact polynomials need integer weights");
}

json grouping_json(const std::optional<double>& tol) {
    return tol ? number(*tol) : json("1e-9*max(1,||A||_inf)");
}

std::string join(const std::vector<double>& xs) {
    std::ostringstream s;
    s.precision(6);
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return s.str();
}

// --- commands -------------------------------------------------------------------------

Outcome cmd_charpoly(Inputs& inputs, const std::string& file, const std::string& format,
                     const std::vector<Vertex>& deleted) {
    const Graph g = inputs.graph(file, format);
    require_integer(g);
    for (Vertex v : deleted) check_vertex(g, v, "deleted");
    const IntPoly whole = charpoly(g);
    const IntPoly poly = deleted.empty() ? whole : charpoly_deleted(g, deleted);
    Outcome o;
    o.result = {{"n", g.size()},
                {"deleted", deleted},
                {"polynomial", polynomial(poly)},
                {"text", poly.to_string()},
                {"charpoly", polynomial(whole)}};
    o.summary = "phi = " + poly.to_string();
    return o;
}

Outcome cmd_spectrum(Inputs& inputs, const std::string& file, const std::string& format, std::optional<double> tol) {
    const Graph g = inputs.graph(file, format);
    const SpectralDecomposition dec = decompose(g, tol);
    std::vector<double> all;
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
        all.insert(all.end(), dec.multiplicities[r], dec.eigenvalues[r]);
    Outcome o;
    o.result = {{"n", g.size()},
                {"eigenvalues", numbers(all)},
                {"distinct", numbers(dec.eigenvalues)},
                {"multiplicities", dec.multiplicities}};
    o.tolerances["grouping"] = number(dec.grouping_tolerance);
    o.summary = "spectrum: " + join(all);
    return o;
}

Outcome cmd_cospectral(Inputs& inputs, const std::string& file, const std::string& format, Vertex a, Vertex b,
                       bool strong, std::optional<double> tol) {
    const Graph g = inputs.graph(file, format);
    check_vertex(g, a, "a");
    check_vertex(g, b, "b");
    if (a == b) throw InputError("a and b must differ");
    Outcome o;
    const bool co = cospectral(g, a, b);
    o.result = {{"a", a}, {"b", b}, {"cospectral", co}, {"exact", g.integer_weights()}};
    o.summary = std::string("cospectral: ") + (co ? "true" : "false");
    o.tolerances["grouping"] = grouping_json(tol);
    o.tolerances["support"] = number(kSupportThreshold);
    if (!strong) return o;

    const SpectralDecomposition dec = decompose(g, tol);
    const StrongCospectrality sc = strongly_cospectral(g, dec, a, b);
    o.result["strongly_cospectral"] = sc.value;
    o.result["exact_checked"] = sc.exact_checked;
    o.result["signature"] = signature_json(sc.signature);
    // With a single a-b path, cospectral and strongly cospectral must coincide.
    const bool single_path = g.integer_weights() && enumerate_ab_paths(g, a, b).size() == 1;
    o.result["single_ab_path"] = single_path;
    if (single_path) {
        o.result["bridge_path_consistent"] = co == sc.value;
        if (co != sc.value) o.exit_code = kExitUnexpected;
    }
    o.summary += std::string(", strongly cospectral: ") + (sc.value ? "true" : "false");
    return o;
}

Outcome pst_outcome(const Graph& g, Vertex a, Vertex b, std::optional<double> tol, double scan_t_max,
                    std::size_t scan_steps) {
    const PstCertificate cert = pst_certificate(g, a, b, tol);
    Outcome o;
    o.result = {{"a", a}, {"b", b}, {"certificate", certificate_json(cert)}};
    o.tolerances = {{"grouping", grouping_json(tol)},
                    {"support", number(kSupportThreshold)},
                    {"integrality", number(kIntegralityTolerance)}};
    if (cert.success) {
        const SpectralDecomposition dec = decompose(g, tol);
        o.result["confirmation"] = {{"fidelity_at_3t", number(evolve_fidelity(dec, a, b, 3 * cert.pst_time))},
                                    {"fidelity_at_5t", number(evolve_fidelity(dec, a, b, 5 * cert.pst_time))}};
        o.summary = "PST at t = " + std::to_string(cert.pst_time);
    } else {
        const FidelityScan scan = fidelity_scan(g, a, b, scan_t_max, scan_steps);
        o.result["confirmation"] = {{"scan_t_max", number(scan_t_max)},
                                    {"scan_steps", scan_steps},
                                    {"max_fidelity", number(scan.fidelity)},
                                    {"argmax_time", number(scan.time)}};
        o.summary = "no PST: " + std::string(to_string(*cert.failure));
    }
    return o;
}

Outcome cmd_pst(Inputs& inputs, const std::string& file, const std::string& format, Vertex a, Vertex b,
                std::optional<double> tol, double scan_t_max, std::size_t scan_steps) {
    const Graph g = inputs.graph(file, format);
    check_vertex(g, a, "a");
    check_vertex(g, b, "b");
    if (a == b) throw InputError("a and b must differ");
    return pst_outcome(g, a, b, tol, scan_t_max, scan_steps);
}

Outcome cmd_compose(Inputs& inputs, const std::string& y1_file, Vertex a, const std::string& y2_file, Vertex b,
                    std::size_t bridge, const std::string& format, std::optional<double> tol, double scan_t_max,
                    std::size_t scan_steps) {
    const Graph y1 = inputs.graph(y1_file, format);
    const Graph y2 = inputs.graph(y2_file, format);
    check_vertex(y1, a, "a");
    check_vertex(y2, b, "b");
    if (bridge < 2) throw InputError("bridge needs at least 2 vertices");
    const Composed z = compose_bridge({y1, a, y2, b, bridge});
    Outcome o = pst_outcome(z.graph, z.a, z.b, tol, scan_t_max, scan_steps);
    json analysis = o.result;
    analysis["cospectral"] = cospectral(z.graph, z.a, z.b);
    analysis["strongly_cospectral"] = strongly_cospectral(z.graph, decompose(z.graph, tol), z.a, z.b).value;
    o.result = {{"n", z.graph.size()},
                {"a", z.a},
                {"b", z.b},
                {"bridge_vertices", bridge},
                {"edgelist", serialize_graph(z.graph, GraphFormat::edgelist)},
                {"analysis", analysis}};
    if (z.graph.is_simple()) o.result["graph6"] = serialize_graph(z.graph, GraphFormat::graph6);
    o.summary = "composed " + std::to_string(z.graph.size()) + " vertices; " + o.summary;
    return o;
}

Outcome cmd_search(Inputs& inputs, std::size_t bridge, std::size_t max_n, bool stdin_graph6, std::size_t jobs) {
    std::vector<MarkedGraph> marked;
    json source;
    if (stdin_graph6) {
        std::ostringstream buf;
        buf << inputs.stream().rdbuf();
        const std::string text = buf.str();
        inputs.absorb(text);
        std::istringstream lines(text);
        Graph6Source src = marked_graphs_from_graph6(lines);
        std::size_t too_large = 0;
        for (auto& m : src.marked) {
            if (m.graph.size() <= max_n) marked.push_back(std::move(m));
            else ++too_large;
        }
        source = {{"kind", "graph6-stdin"},
                  {"graphs_read", src.graphs_read},
                  {"skipped_disconnected", src.skipped_disconnected},
                  {"skipped_marked_over_max_n", too_large}};
    } else {
        if (max_n > kMaxEnumeratedOrder)
            throw InputError("built-in generator covers max-n <= " + std::to_string(kMaxEnumeratedOrder) +
                             "; feed larger graphs with --stdin-graph6");
        marked = marked_connected_graphs(max_n);
        source = {{"kind", "built-in"}};
    }
    inputs.absorb("bridge=" + std::to_string(bridge) + ";max_n=" + std::to_string(max_n));
    SearchOptions options;
    options.bridge_vertices = bridge;
    options.jobs = jobs;
    const SearchReport report = search_no_pst(marked, options);
    Outcome o;
    o.result = search_json(report);
    o.result["max_n"] = max_n;
    o.result["source"] = source;
    o.tolerances = {{"support", number(kSupportThreshold)},
                    {"integrality", number(kIntegralityTolerance)},
                    {"scan_confirmation", number(1e-6)}};
    o.exit_code = report.expected_outcome() ? kExitOk : kExitUnexpected;
    o.summary = std::to_string(report.instances_tested) + " instances, " + std::to_string(report.pst_successes.size()) +
                " PST (" + std::to_string(report.nontrivial_successes()) + " nontrivial)";
    return o;
}

Outcome cmd_verify(Inputs& inputs, const std::string& suite, std::uint64_t seed, std::size_t instances) {
    inputs.absorb("suite=" + suite + ";seed=" + std::to_string(seed) + ";instances=" + std::to_string(instances));
    SuiteOptions options;
    options.seed = seed;
    options.instances = instances;
    const SuiteResult r = run_suite(suite, options);
    Outcome o;
    o.result = suite_json(r);
    o.tolerances = {{"interlacing_slack", number(kInterlacingSlack)},
                    {"projector_match", number(1e-7)},
                    {"support", number(kSupportThreshold)}};
    o.exit_code = r.passed() ? kExitOk : kExitUnexpected;
    o.summary = "suite " + suite + (r.passed() ? " passed" : " FAILED");
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Continuous-time quantum walk analysis on graphs", "qwalk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qwalk 0.1.0"));

    std::string format = "auto";
    std::optional<double> tol;
    std::string file = "-";
    Vertex a = 0, b = 0;
    std::vector<Vertex> deleted;
    bool strong = false;
    double scan_t_max = 100.0;
    std::size_t scan_steps = 20000;
    std::string y1_file, y2_file;
    std::size_t bridge = 2, max_n = 4, jobs = 1;
    bool stdin_graph6 = false;
    std::string suite;
    std::uint64_t seed = SuiteOptions{}.seed;
    std::size_t instances = SuiteOptions{}.instances;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Input format: auto, edgelist or graph6")
            ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
            ->capture_default_str();
    };
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", tol, "Eigenvalue grouping tolerance (default 1e-9*max(1,||A||))")
            ->check(CLI::PositiveNumber);
    };
    auto add_scan = [&](CLI::App* sub) {
        sub->add_option("--scan-t-max", scan_t_max, "Fidelity scan horizon when no certificate exists")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--scan-steps", scan_steps, "Fidelity scan grid size")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    charpoly_cmd->add_option("file", file, "Graph file, - for stdin")->capture_default_str();
    charpoly_cmd->add_option("--deleted", deleted, "Vertices to delete first");
    add_format(charpoly_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
    spectrum_cmd->add_option("file", file, "Graph file, - for stdin")->capture_default_str();
    add_format(spectrum_cmd);
    add_tol(spectrum_cmd);

    auto* cospectral_cmd = app.add_subcommand("cospectral", "Cospectrality of a vertex pair");
    cospectral_cmd->add_option("file", file, "Graph file, - for stdin")->required();
    cospectral_cmd->add_option("a", a)->required();
    cospectral_cmd->add_option("b", b)->required();
    cospectral_cmd->add_flag("--strong", strong, "Also decide strong cospectrality");
    add_format(cospectral_cmd);
    add_tol(cospectral_cmd);

    auto* pst_cmd = app.add_subcommand("pst", "Perfect state transfer certificate");
    pst_cmd->add_option("file", file, "Graph file, - for stdin")->required();
    pst_cmd->add_option("a", a)->required();
    pst_cmd->add_option("b", b)->required();
    add_format(pst_cmd);
    add_tol(pst_cmd);
    add_scan(pst_cmd);

    auto* compose_cmd = app.add_subcommand("compose", "Join two rooted graphs by a bridge path and analyse the roots");
    compose_cmd->add_option("--y1", y1_file, "First graph file")->required();
    compose_cmd->add_option("--a", a, "Root in the first graph")->required();
    compose_cmd->add_option("--y2", y2_file, "Second graph file")->required();
    compose_cmd->add_option("--b", b, "Root in the second graph")->required();
    compose_cmd->add_option("--bridge", bridge, "Vertices on the bridge path, ends included")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    add_format(compose_cmd);
    add_tol(compose_cmd);
    add_scan(compose_cmd);

    auto* search_cmd = app.add_subcommand("search", "Exhaustive PST search across a bridge");
    search_cmd->add_option("--bridge", bridge, "Vertices on the bridge path, ends included")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    search_cmd->add_option("--max-n", max_n, "Largest order of Y1 and Y2")->check(CLI::Range(1, 64))->capture_default_str();
    search_cmd->add_flag("--stdin-graph6", stdin_graph6, "Read candidate graphs as graph6 lines from stdin");
    search_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--instances", instances, "Random instances per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string command = "qwalk";
    for (const auto& arg : args) command += " " + arg;
    json report{{"schema_version", kSchemaVersion}, {"command", command}};

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    Inputs inputs(in);
    Outcome outcome;
    int code = kExitOk;
    try {
        if (*charpoly_cmd) outcome = cmd_charpoly(inputs, file, format, deleted);
        else if (*spectrum_cmd) outcome = cmd_spectrum(inputs, file, format, tol);
        else if (*cospectral_cmd) outcome = cmd_cospectral(inputs, file, format, a, b, strong, tol);
        else if (*pst_cmd) outcome = cmd_pst(inputs, file, format, a, b, tol, scan_t_max, scan_steps);
        else if (*compose_cmd)
            outcome = cmd_compose(inputs, y1_file, a, y2_file, b, bridge, format, tol, scan_t_max, scan_steps);
        else if (*search_cmd) outcome = cmd_search(inputs, bridge, max_n, stdin_graph6, jobs);
        else outcome = cmd_verify(inputs, suite, seed, instances);
        code = outcome.exit_code;
    } catch (const ParseError& e) {
        code = kExitInputError;
        report["error"] = {{"kind", "parse"}, {"code", std::string(to_string(e.code()))}, {"line", e.line()}, {"message", e.what()}};
    } catch (const InputError& e) {
        code = kExitInputError;
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
    } catch (const std::invalid_argument& e) {
        code = kExitInputError;
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
    } catch (const std::out_of_range& e) {
        code = kExitInputError;
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
    } catch (const std::exception& e) {
        code = kExitUnexpected;
        report["error"] = {{"kind", "math"}, {"message", e.what()}};
    }

    report["input_digest"] = digest_string(inputs.digest());
    if (report.contains("error")) {
        err << "error: " << report["error"]["message"].get<std::string>() << '\n';
    } else {
        report["result"] = outcome.result;
        report["tolerances"] = outcome.tolerances;
        err << outcome.summary << '\n';
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["wall_time_ms"] = number(elapsed);
    report["exit_code"] = code;
    out << report.dump(2) << '\n';
    return code;
}

}  // namespace qwalk::cli
