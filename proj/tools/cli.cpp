#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bosam/error.hpp"
#include "bosam/graph.hpp"
#include "bosam/metrics.hpp"
#include "bosam/models.hpp"
#include "bosam/ordering.hpp"
#include "bosam/render.hpp"

namespace bosam::cli {
namespace {

struct GenerateArgs {
    std::string model;
    std::size_t nodes = 0;
    std::size_t links = 0;
    std::uint64_t seed = 0;
    std::size_t ba_m = 3;
    PfpParams pfp{};
    std::string out;
};

struct OrderArgs {
    std::string in;
    std::string mode = "cohesion";
    std::string out;
};

struct RenderArgs {
    std::string in;
    std::string order_file;
    std::string mode = "cohesion";
    std::size_t size = 1024;
    std::size_t zoom = 1;
    std::string out;
};

struct MetricsArgs {
    std::string in;
    std::size_t kmin = 5;
    std::vector<std::size_t> ranks;
    std::size_t sample_sources = 1000;
    std::uint64_t seed = 0;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
}

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    return parse_edge_list(in);
}

void do_generate(const GenerateArgs& a) {
    ModelSpec spec;
    spec.family = parse_model_family(a.model);
    spec.nodes = a.nodes;
    spec.links = a.links;
    spec.seed = a.seed;
    spec.ba_links_per_node = a.ba_m;
    spec.pfp = a.pfp;
    const Graph g = generate(spec);
    auto out = open_out(a.out);
    write_edge_list(g, out);
    finish(out, a.out);
}

void do_order(const OrderArgs& a) {
    const Graph g = load_graph(a.in);
    const NodeOrdering ordering = bosam_order(g, parse_ordering_mode(a.mode));
    auto out = open_out(a.out);
    write_ordering(g, ordering, out);
    finish(out, a.out);
}

void do_render(const RenderArgs& a) {
    const Graph g = load_graph(a.in);
    const OrderingMode mode = parse_ordering_mode(a.mode);
    std::optional<NodeOrdering> ordering;
    if (!a.order_file.empty()) {
        auto in = open_in(a.order_file);
        ordering = read_ordering(g, in, mode);
    } else {
        ordering = bosam_order(g, mode);
    }
    const Bitmap bitmap = rasterize(g, *ordering, RenderSpec{a.size, a.zoom});
    auto out = open_out(a.out);
    encode_pbm(bitmap, out);
    finish(out, a.out);
}

void do_metrics(const MetricsArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.in);
    ReportOptions options;
    options.kmin = a.kmin;
    options.ranks = a.ranks;
    options.path.sample_sources = a.sample_sources;
    options.path.seed = a.seed;
    out << to_json(compute_report(g, options));
    out.flush();
    if (!out) throw IoError("failed writing report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sorted adjacency matrix bitmaps and topology metrics for large networks", "bosam"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate an ER, BA or PFP network as an edge list");
    generate->add_option("--model", gen.model, "Model family")
        ->required()
        ->check(CLI::IsMember({"er", "ba", "pfp"}));
    generate->add_option("--nodes", gen.nodes, "Node count")->required();
    generate->add_option("--links", gen.links, "Link count")->required();
    generate->add_option("--seed", gen.seed, "64-bit seed")->required();
    generate->add_option("--ba-m", gen.ba_m, "BA links per new node")->capture_default_str();
    generate->add_option("--pfp-p", gen.pfp.p, "PFP p")->capture_default_str();
    generate->add_option("--pfp-q", gen.pfp.q, "PFP q")->capture_default_str();
    generate->add_option("--pfp-delta", gen.pfp.delta, "PFP delta")->capture_default_str();
    generate->add_option("--out", gen.out, "Output edge list")->required();

    OrderArgs ord;
    auto* order = app.add_subcommand("order", "Write the sorted node list");
    order->add_option("--in", ord.in, "Input edge list")->required();
    order->add_option("--mode", ord.mode, "Tie-break mode")
        ->check(CLI::IsMember({"cohesion", "radiation"}))
        ->capture_default_str();
    order->add_option("--out", ord.out, "Output ordering file")->required();

    RenderArgs ren;
    auto* render = app.add_subcommand("render", "Render the sorted adjacency matrix as binary PBM");
    render->add_option("--in", ren.in, "Input edge list")->required();
    render->add_option("--order-file", ren.order_file, "Precomputed ordering (from 'order')");
    render->add_option("--mode", ren.mode, "Tie-break mode when no order file is given")
        ->check(CLI::IsMember({"cohesion", "radiation"}))
        ->capture_default_str();
    render->add_option("--size", ren.size, "Image side in pixels")->check(CLI::PositiveNumber)->capture_default_str();
    render->add_option("--zoom", ren.zoom, "Keep the top 1/S of sorted indices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    render->add_option("--out", ren.out, "Output PBM")->required();

    MetricsArgs met;
    auto* metrics = app.add_subcommand("metrics", "Print topology metrics as JSON");
    metrics->add_option("--in", met.in, "Input edge list")->required();
    metrics->add_option("--kmin", met.kmin, "Power-law tail start")->capture_default_str();
    metrics->add_option("--ranks", met.ranks, "Comma-separated rich-club ranks")->delimiter(',');
    metrics->add_option("--sample-sources", met.sample_sources, "BFS sources beyond the exact-size limit")
        ->capture_default_str();
    metrics->add_option("--seed", met.seed, "Source-sampling seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*generate) do_generate(gen);
        if (*order) do_order(ord);
        if (*render) do_render(ren);
        if (*metrics) do_metrics(met, out);
    } catch (const ParseError& e) {
        err << "error: parse failure, " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bosam::cli
