#include "arrangelab/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrangelab/campaign.h"
#include "arrangelab/errors.h"
#include "arrangelab/graph_io.h"
#include "arrangelab/serialize.h"
#include "arrangelab/theorems.h"

namespace arrangelab::cli {

namespace {

struct InputSpec {
    std::string path = "-";
    std::string format = "auto";
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream os;
    if (path == "-") {
        os << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError(0, "cannot open '" + path + "'");
        os << f.rdbuf();
    }
    return os.str();
}

Graph single_graph6(const std::string& text) {
    auto graphs = parse_graph6_corpus(text);
    if (graphs.size() != 1)
        throw ParseError(0, "expected one graph6 line, found " + std::to_string(graphs.size()));
    return graphs.front();
}

Arrangement load(const InputSpec& spec, std::istream& in) {
    const std::string text = read_all(spec.path, in);
    std::string format = spec.format;
    if (format == "auto") {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos)
            format = "edgelist";
        else if (text[first] == '{')
            format = "json";
        else
            format = looks_like_edge_list(text) ? "edgelist" : "graph6";
    }
    if (format == "edgelist") return Arrangement::graphical(parse_edge_list(text));
    if (format == "graph6") return Arrangement::graphical(single_graph6(text));
    if (format == "general") return parse_general_arrangement(text);
    if (format == "json") {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        if (j.is_object() && j.contains("arrangement")) return lattice_from_json(j).arrangement();
        return arrangement_from_json(j);
    }
    throw ParseError(0, "unknown input format '" + format + "'");
}

void add_input(CLI::App* cmd, InputSpec& spec, const std::string& format_flag) {
    cmd->add_option("input", spec.path, "Input file, '-' for stdin")->capture_default_str();
    cmd->add_option(format_flag, spec.format, "Input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6", "general", "json"}))
        ->capture_default_str();
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const InputSpec& spec, std::istream& in, std::ostream& out) {
    const Arrangement a = load(spec, in);
    const auto l = build_lattice(a);
    Json j = {{"kind", a.kind() == ArrangementKind::graphical ? "graphical" : "general"},
              {"n", a.ambient_dim()},
              {"m", a.size()}};
    if (a.kind() == ArrangementKind::graphical) {
        const Graph& g = a.graph();
        Json bl = Json::array();
        for (const Graph& b : blocks(g)) {
            Json edges = Json::array();
            for (const Edge& e : b.edges()) edges.push_back(a.label(*g.edge_index(e.u, e.v)));
            bl.push_back({{"vertices", b.covered_vertices()}, {"edges", edges}});
        }
        j["blocks"] = bl;
        j["chordality"] = certificate_to_json(chordality(g));
    }
    j["rank"] = l.rank();
    j["lattice_size"] = l.size();
    j["supersolvable"] = is_supersolvable(l);
    j["characteristic_polynomial"] = polynomial_to_json(characteristic_polynomial(l));
    print(out, j);
    return ok;
}

int cmd_char_poly(const InputSpec& spec, bool text, std::istream& in, std::ostream& out) {
    const auto chi = characteristic_polynomial(build_lattice(load(spec, in)));
    if (text)
        out << chi.to_string() << '\n';
    else
        print(out, polynomial_to_json(chi));
    return ok;
}

Json chain_for(const PartitionChecker& checker, const ArrangementPartition& p) {
    const auto& l = checker.lattice();
    if (l.arrangement().kind() == ArrangementKind::graphical)
        return chain_to_json(l, partition_to_modular_chain(checker, p));
    auto chains = inducing_chains(l, p, 1);
    if (chains.empty()) throw std::logic_error("no maximal chain induces the partition");
    return chain_to_json(l, chains.front());
}

int cmd_nice(const InputSpec& spec, std::size_t limit, bool with_chain, std::istream& in, std::ostream& out) {
    const Arrangement a = load(spec, in);
    const auto l = build_lattice(a);
    EnumerationOptions opts;
    opts.limit = limit;
    const auto nice = enumerate_nice_partitions(l, opts);
    const PartitionChecker checker(l);
    Json list = Json::array();
    for (const auto& p : nice) {
        if (!with_chain) {
            list.push_back(partition_to_json(a, p));
            continue;
        }
        list.push_back({{"partition", partition_to_json(a, p)}, {"chain", chain_for(checker, p)}});
    }
    print(out, {{"count", nice.size()}, {"factored", !nice.empty()}, {"partitions", list}});
    return ok;
}

int cmd_chain(const InputSpec& spec, const std::string& partition_text, std::istream& in, std::ostream& out) {
    const Arrangement a = load(spec, in);
    const auto l = build_lattice(a);
    Json pj;
    try {
        pj = Json::parse(partition_text);
    } catch (const Json::parse_error& e) {
        throw ParseError(0, std::string("invalid partition JSON: ") + e.what());
    }
    const auto p = partition_from_json(a, pj);
    const PartitionChecker checker(l);
    const auto cert = checker.is_nice(p);
    if (!cert.nice) {
        Json j = {{"nice", false}, {"partition", partition_to_json(a, p)}};
        if (const auto* s = std::get_if<Section>(&cert.failure)) {
            Json labels = Json::array();
            for (std::size_t h : *s) labels.push_back(a.label(h));
            j["dependent_section"] = labels;
        } else {
            j["flat_without_singleton"] = flat_to_json(l, std::get<FlatId>(cert.failure));
        }
        print(out, j);
        return counterexample;
    }
    print(out, {{"nice", true}, {"partition", partition_to_json(a, p)}, {"chain", chain_for(checker, p)}});
    return ok;
}

int cmd_lattice(const InputSpec& spec, const std::string& output, std::istream& in, std::ostream& out) {
    const auto l = build_lattice(load(spec, in));
    if (output == "dot")
        out << lattice_to_dot(l);
    else
        print(out, lattice_to_json(l));
    return ok;
}

struct VerifyFlags {
    int min_n = 1;
    int max_n = 4;
    std::string theorems;
    std::string corpus;
    unsigned threads = 1;
    bool include_disconnected = false;
    std::size_t t3_max = 10;
};

int cmd_verify(const VerifyFlags& f, std::istream& in, std::ostream& out) {
    CampaignOptions opts;
    opts.min_n = f.min_n;
    opts.max_n = f.max_n;
    opts.threads = f.threads;
    opts.connected_only = !f.include_disconnected;
    opts.suite.checks = parse_theorem_list(f.theorems);
    opts.suite.t3_max_hyperplanes = f.t3_max;
    if (!f.corpus.empty()) opts.corpus = parse_graph6_corpus(read_all(f.corpus, in));
    const auto report = campaign(opts);
    print(out, report.to_json());
    return report.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection lattices, nice partitions and modular chains of hyperplane arrangements",
                 "arrangelab"};
    app.require_subcommand(1);

    InputSpec spec;
    std::size_t limit = 0;
    bool with_chain = false;
    bool text = false;
    std::string partition_text;
    std::string output = "json";
    VerifyFlags verify;

    auto* analyze = app.add_subcommand("analyze", "Blocks, chordality, supersolvability and lattice summary");
    add_input(analyze, spec, "--format");

    auto* nice = app.add_subcommand("nice", "List nice partitions");
    add_input(nice, spec, "--format");
    nice->add_option("--limit", limit, "Stop after this many partitions (0 = all)");
    nice->add_flag("--chain", with_chain, "Pair every partition with a maximal modular chain inducing it");

    auto* chain = app.add_subcommand("chain", "Maximal modular chain inducing a nice partition");
    add_input(chain, spec, "--format");
    chain->add_option("--partition", partition_text, "Partition as JSON, e.g. [[\"1-2\"],[\"1-3\",\"2-3\"]]")
        ->required();

    auto* lattice = app.add_subcommand("lattice", "Export the intersection lattice");
    add_input(lattice, spec, "--input-format");
    lattice->add_option("--format", output, "Output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

    auto* char_poly = app.add_subcommand("char-poly", "Characteristic polynomial");
    add_input(char_poly, spec, "--format");
    char_poly->add_flag("--text", text, "Print only the polynomial");

    auto* ver = app.add_subcommand("verify", "Run the theorem checks over a graph corpus");
    ver->add_option("--min-n", verify.min_n, "Smallest vertex count")->capture_default_str();
    ver->add_option("--max-n", verify.max_n, "Largest vertex count")->capture_default_str();
    ver->add_option("--theorems", verify.theorems, "Comma-separated subset of T1,T2,T3,T4 (default all)");
    ver->add_option("--corpus", verify.corpus, "graph6 file to check instead of the generated graphs");
    ver->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
    ver->add_flag("--include-disconnected", verify.include_disconnected, "Also check disconnected graphs");
    ver->add_option("--t3-max-hyperplanes", verify.t3_max, "Skip T3 above this many hyperplanes")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (*analyze) return cmd_analyze(spec, in, out);
        if (*nice) return cmd_nice(spec, limit, with_chain, in, out);
        if (*chain) return cmd_chain(spec, partition_text, in, out);
        if (*lattice) return cmd_lattice(spec, output, in, out);
        if (*char_poly) return cmd_char_poly(spec, text, in, out);
        if (*ver) return cmd_verify(verify, in, out);
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << '\n';
        return bound;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

}  // namespace arrangelab::cli
