#include "gdes/errors.hpp"
#include "gdes/families.hpp"
#include "gdes/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using gdes::sig12;
using nlohmann::json;

// Exit-code contract: 0 ok, 2 bad input, 3 spectral failure, 4 oracle cap
// exceeded, 5 disconnected product submitted to design verification.
constexpr int kExitBadInput = 2;
constexpr int kExitSpectral = 3;
constexpr int kExitCap = 4;
constexpr int kExitDisconnectedProduct = 5;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json base_report(const std::string& command_echo, bool timestamp) {
    json j;
    j["tool"] = "gdes";
    j["version"] = gdes::kVersion;
    j["command"] = command_echo;
    if (timestamp) j["timestamp"] = utc_timestamp();
    j["warnings"] = json::array();
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GenSpec {
    std::string family;
    std::vector<int> params;
    std::string out;
};

int run_gen(const GenSpec& spec, const std::string& echo, bool timestamp) {
    gdes::Graph graph = gdes::complete(2);
    std::optional<gdes::VertexSet> sidecar;
    std::string stem = spec.family;
    for (int p : spec.params) stem += "_" + std::to_string(p);

    const auto& p = spec.params;
    auto need = [&](size_t count) {
        if (p.size() != count)
            throw gdes::invalid_input("gen " + spec.family + ": expected " + std::to_string(count) + " parameter(s)");
    };
    if (spec.family == "complete") {
        need(1);
        graph = gdes::complete(p[0]);
    } else if (spec.family == "cycle") {
        need(1);
        graph = gdes::cycle(p[0]);
    } else if (spec.family == "hypercube") {
        need(1);
        graph = gdes::hypercube(p[0]);
        sidecar = gdes::hypercube_design(p[0], {1}).first;
    } else if (spec.family == "kneser") {
        need(2);
        graph = gdes::kneser(p[0], p[1]);
        sidecar = gdes::kneser_star(p[0], p[1], 1);
    } else if (spec.family == "derangement") {
        need(1);
        graph = gdes::derangement_graph(p[0]);
        sidecar = gdes::permutation_stabilizer(p[0], 1, 1);
    } else {
        throw gdes::invalid_input("gen: unknown family '" + spec.family +
                                  "' (expected complete|cycle|hypercube|kneser|derangement)");
    }

    const std::string out_path = spec.out.empty() ? stem + ".edges" : spec.out;
    gdes::write_graph(graph, out_path);
    json j = base_report(echo, timestamp);
    j["graph"] = gdes::graph_summary_json(graph);
    j["written"] = json::array({out_path});
    if (sidecar) {
        std::string side_path = out_path;
        const auto dot = side_path.rfind(".edges");
        if (dot != std::string::npos) side_path.erase(dot);
        side_path += ".design";
        gdes::write_vertex_set(*sidecar, side_path);
        j["written"].push_back(side_path);
        j["design_size"] = sidecar->size();
    }
    emit(j);
    return 0;
}

int run_fixture_gen(const std::string& name, const std::string& out, const std::string& echo, bool timestamp) {
    gdes::Fixture f = gdes::fixture(name);
    const std::string out_path = out.empty() ? name + ".edges" : out;
    gdes::write_graph(f.graph, out_path);
    std::string side_path = out_path;
    const auto dot = side_path.rfind(".edges");
    if (dot != std::string::npos) side_path.erase(dot);
    side_path += ".design";
    gdes::write_vertex_set(f.design, side_path);
    json j = base_report(echo, timestamp);
    j["graph"] = gdes::graph_summary_json(f.graph);
    j["written"] = json::array({out_path, side_path});
    j["design_size"] = f.design.size();
    emit(j);
    return 0;
}

int run_analyze(const std::string& graph_path, const std::string& set_path, double eps, double tau,
                bool with_witness_basis, bool lenient, const std::string& echo, bool timestamp) {
    const gdes::Graph g = gdes::read_graph(graph_path, lenient);
    const gdes::VertexSet w = gdes::read_vertex_set(set_path, g.vertex_count());
    const gdes::SpectralOptions opts{tau, gdes::Exec::Parallel};
    const auto dec = gdes::decompose_graph(g, opts);

    json j = base_report(echo, timestamp);
    j["graph"] = gdes::graph_summary_json(g);
    j["spectrum"] = gdes::spectrum_json(dec);
    j["design"] = gdes::to_json(gdes::design_order(g, dec, w, eps));
    if (with_witness_basis) j["witness_basis"] = gdes::to_json(gdes::witness_basis(g, dec, w, eps));
    for (const auto& warning : dec.warnings()) j["warnings"].push_back(warning);
    emit(j);
    return 0;
}

int run_bounds(const std::string& graph_path, gdes::BoundsOptions opts, const std::string& witness_path,
               double tau, bool lenient, const std::string& echo, bool timestamp) {
    const gdes::Graph g = gdes::read_graph(graph_path, lenient);
    if (!witness_path.empty()) opts.alpha_witness = gdes::read_vertex_set(witness_path, g.vertex_count());
    const auto dec = gdes::decompose_graph(g, gdes::SpectralOptions{tau, gdes::Exec::Parallel});
    const auto report = gdes::compute_bounds(g, dec, opts);

    json j = base_report(echo, timestamp);
    j["graph"] = gdes::graph_summary_json(g);
    j["spectrum"] = gdes::spectrum_json(dec);
    j["bounds"] = gdes::to_json(report);
    if (report.hoffman_witness_only)
        j["warnings"].push_back("hoffman sharpness is witness-only: the witness meets the bound but no "
                                "maximality search was run");
    for (const auto& warning : dec.warnings()) j["warnings"].push_back(warning);
    emit(j);
    return 0;
}

int run_product(const std::string& path1, const std::string& path2, const std::string& kind, const std::string& out,
                const std::string& set1_path, const std::string& set2_path, double eps, double tau, bool lenient,
                const std::string& echo, bool timestamp) {
    const gdes::Graph g1 = gdes::read_graph(path1, lenient);
    const gdes::Graph g2 = gdes::read_graph(path2, lenient);
    gdes::Graph product =
        kind == "cartesian" ? gdes::cartesian_product(g1, g2) : gdes::weak_product(g1, g2);

    json j = base_report(echo, timestamp);
    j["graph"] = gdes::graph_summary_json(product);
    j["kind"] = kind;
    if (!out.empty()) {
        gdes::write_graph(product, out);
        j["written"] = json::array({out});
    }
    if (!set1_path.empty() || !set2_path.empty()) {
        if (set1_path.empty() || set2_path.empty())
            throw gdes::invalid_input("product: --set1 and --set2 must be given together");
        if (kind != "weak")
            throw gdes::invalid_input("product: design verification is defined for the weak product only");
        const gdes::VertexSet w1 = gdes::read_vertex_set(set1_path, g1.vertex_count());
        const gdes::VertexSet w2 = gdes::read_vertex_set(set2_path, g2.vertex_count());
        j["product"] = gdes::to_json(gdes::verify_product_order(g1, w1, g2, w2, eps, tau));
    }
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of graphical designs on regular graphs"};
    app.require_subcommand(1);
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from the report");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph (plus its design sidecar where one exists)");
    std::string family;
    std::vector<int> params;
    std::string gen_out;
    std::string fixture_name;
    gen->add_option("family", family, "complete|cycle|hypercube|kneser|derangement|fixture")->required();
    gen->add_option("params", params, "family parameters (fixture takes a name via --name)");
    gen->add_option("--name", fixture_name, "fixture name (sylvester|truncated_tetrahedron)");
    gen->add_option("-o,--out", gen_out, "output edge-list path");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "design order and extremality of a vertex subset");
    std::string an_graph, an_set;
    double epsilon = gdes::kDefaultActivityEps;
    double tau = 1e-7;
    bool witness_flag = false, lenient = false;
    analyze->add_option("graph", an_graph, "edge-list file")->required();
    analyze->add_option("set", an_set, "vertex-set file")->required();
    analyze->add_option("--epsilon", epsilon, "activity threshold relative to |W| (default 1e-8)");
    analyze->add_option("--tau", tau, "eigenvalue grouping tolerance (default 1e-7)");
    analyze->add_flag("--witness-basis", witness_flag, "include the certifying eigenbasis summary");
    analyze->add_flag("--lenient", lenient, "deduplicate repeated edges instead of rejecting them");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Hoffman/Cheeger bounds, exact oracles and sharpness");
    std::string bd_graph, bd_witness;
    gdes::BoundsOptions bopts;
    double bd_tau = 1e-7;
    bool bd_lenient = false;
    bounds->add_option("graph", bd_graph, "edge-list file")->required();
    bounds->add_flag("--exact-alpha", bopts.exact_alpha, "run the exact independence oracle");
    bounds->add_flag("--exact-cheeger", bopts.exact_cheeger, "run the exact Cheeger oracle");
    bounds->add_option("--alpha-cap", bopts.alpha_cap, "vertex cap for the independence oracle (default 40)");
    bounds->add_option("--cheeger-cap", bopts.cheeger_cap, "vertex cap for the Cheeger oracle (default 24)");
    bounds->add_option("--alpha-witness", bd_witness,
                       "independent-set file; checks witness-meets-bound instead of searching");
    bounds->add_option("--tau", bd_tau, "eigenvalue grouping tolerance (default 1e-7)");
    bounds->add_flag("--lenient", bd_lenient, "deduplicate repeated edges instead of rejecting them");

    // product
    auto* product = app.add_subcommand("product", "weak/cartesian product, optionally verifying design orders");
    std::string pr_g1, pr_g2, pr_kind = "weak", pr_out, pr_set1, pr_set2;
    double pr_eps = gdes::kDefaultActivityEps, pr_tau = 1e-7;
    bool pr_lenient = false;
    product->add_option("graph1", pr_g1, "edge-list file")->required();
    product->add_option("graph2", pr_g2, "edge-list file")->required();
    product->add_option("--kind", pr_kind, "weak|cartesian (default weak)")
        ->check(CLI::IsMember({"weak", "cartesian"}));
    product->add_option("-o,--out", pr_out, "write the product graph here");
    product->add_option("--set1", pr_set1, "design in the first factor");
    product->add_option("--set2", pr_set2, "design in the second factor");
    product->add_option("--epsilon", pr_eps, "activity threshold (default 1e-8)");
    product->add_option("--tau", pr_tau, "grouping tolerance (default 1e-7)");
    product->add_flag("--lenient", pr_lenient, "deduplicate repeated edges instead of rejecting them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitBadInput;
    }

    std::string echo;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) echo += ' ';
        echo += argv[i];
    }
    const bool timestamp = !no_timestamp;

    try {
        if (gen->parsed()) {
            if (family == "fixture") {
                if (fixture_name.empty())
                    throw gdes::invalid_input("gen fixture: missing --name");
                return run_fixture_gen(fixture_name, gen_out, echo, timestamp);
            }
            return run_gen(GenSpec{family, params, gen_out}, echo, timestamp);
        }
        if (analyze->parsed())
            return run_analyze(an_graph, an_set, epsilon, tau, witness_flag, lenient, echo, timestamp);
        if (bounds->parsed()) return run_bounds(bd_graph, bopts, bd_witness, bd_tau, bd_lenient, echo, timestamp);
        if (product->parsed())
            return run_product(pr_g1, pr_g2, pr_kind, pr_out, pr_set1, pr_set2, pr_eps, pr_tau, pr_lenient, echo,
                               timestamp);
    } catch (const gdes::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const gdes::spectral_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpectral;
    } catch (const gdes::disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return product->parsed() ? kExitDisconnectedProduct : kExitBadInput;
    } catch (const gdes::certification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpectral;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
