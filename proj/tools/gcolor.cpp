// gcolor: generate graphs, color them, and run experiment batteries.
//
// Exit status: 0 success, 2 usage or input error, 1 internal failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "gcolor/gcolor.hpp"

namespace {

using namespace gcolor;

std::uint64_t pick_seed(std::optional<std::uint64_t> seed)
{
    if (seed)
        return *seed;
    std::uint64_t s = (std::uint64_t(std::random_device{}()) << 32) ^ std::random_device{}();
    std::cerr << "no --seed given, using seed " << s << '\n';
    return s;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    return out;
}

void apply_settings(TrainConfig& cfg, const std::string& config_path, const std::vector<std::string>& sets)
{
    auto apply = [&](const std::string& key, const std::string& value) {
        if (!apply_train_setting(cfg, key, value))
            throw InputError("unknown trainer setting '" + key + "'");
    };
    if (!config_path.empty())
        for (const auto& [key, value] : load_config(config_path))
            apply(key, value);
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InputError("--set expects key=value, got '" + s + "'");
        apply(s.substr(0, eq), s.substr(eq + 1));
    }
    cfg.validate();
}

struct GenArgs {
    std::string family;
    std::size_t n = 0;
    double d = -1.0;
    std::size_t r = 0;
    std::vector<std::size_t> dims;
    std::size_t rows = 0, cols = 0;
    std::string degrees_from;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "edges";
};

int cmd_gen(const GenArgs& a)
{
    auto need_n = [&] {
        if (a.n < 1)
            throw InputError("--family " + a.family + " needs -n");
    };
    Graph g;
    if (a.family == "er") {
        need_n();
        if (a.d < 0)
            throw InputError("--family er needs -d");
        g = gen_erdos_renyi(a.n, a.d, pick_seed(a.seed));
    } else if (a.family == "regular") {
        need_n();
        g = gen_regular(a.n, a.r, pick_seed(a.seed));
    } else if (a.family == "cycle") {
        g = gen_family(Cycle{a.n});
    } else if (a.family == "complete") {
        g = gen_family(Complete{a.n});
    } else if (a.family == "grid") {
        g = gen_family(Grid{a.dims});
    } else if (a.family == "hex") {
        g = gen_family(HexLattice{a.rows, a.cols});
    } else if (a.family == "tri") {
        g = gen_family(TriLattice{a.rows, a.cols});
    } else if (a.family == "max-planar") {
        need_n();
        g = gen_max_planar(a.n, pick_seed(a.seed));
    } else if (a.family == "replica") {
        if (a.degrees_from.empty())
            throw InputError("--family replica needs --degrees-from <graph>");
        Graph source = load_graph(a.degrees_from);
        auto deg = source.degrees();
        g = gen_replica(DegreeSequence{{deg.begin(), deg.end()}}, pick_seed(a.seed));
    } else {
        throw InputError("unknown family '" + a.family + "'");
    }
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        if (a.format == "col")
            write_dimacs(out, g);
        else
            write_edge_list(out, g);
    }
    std::cout << "n=" << g.order() << " m=" << g.size() << '\n';
    return 0;
}

struct SolveArgs {
    std::string graph;
    std::string algo;
    std::size_t k = 0;
    std::optional<std::uint64_t> seed;
    std::string out, soft_out, trace_out, config;
    std::vector<std::string> sets;
    bool drop_isolated = false;
};

int cmd_solve(const SolveArgs& a)
{
    Algorithm algo = parse_algorithm(a.algo);
    if (a.k < 1)
        throw InputError("-k must be at least 1");
    TrainConfig cfg;
    apply_settings(cfg, a.config, a.sets);
    Graph g = load_graph(a.graph, {a.drop_isolated, nullptr});
    std::uint64_t seed = pick_seed(a.seed);

    HardColoring coloring;
    if (algo == Algorithm::mod_gcn || algo == Algorithm::full_gcn) {
        cfg.seed = seed;
        auto r = algo == Algorithm::mod_gcn ? mod_gcn(g, a.k, cfg) : full_gcn(g, a.k, cfg);
        if (!a.soft_out.empty()) {
            auto out = open_out(a.soft_out);
            write_soft_coloring(out, r.soft);
        }
        if (!a.trace_out.empty()) {
            auto out = open_out(a.trace_out);
            write_trace_csv(out, r.trace);
        }
        coloring = r.hard;
    } else {
        if (!a.soft_out.empty() || !a.trace_out.empty())
            throw InputError("--soft-out and --trace-out need a GCN algorithm");
        coloring = solve(g, algo, a.k, seed, cfg);
    }
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_coloring(out, coloring);
    }
    std::size_t loss = loss_hard(g, coloring);
    std::cout << "loss=" << loss << " proper=" << (loss == 0 ? "true" : "false") << " k=" << a.k
              << " seed=" << seed << '\n';
    return 0;
}

struct BenchArgs {
    std::string config;
    std::string out;
    std::string summary;
    unsigned jobs = 1;
    bool no_time = false;
};

int cmd_bench(const BenchArgs& a)
{
    auto cfg = BenchConfig::from_map(load_config(a.config));
    if (a.jobs < 1)
        throw InputError("--jobs must be at least 1");
    auto records = run_bench(cfg, a.jobs);
    if (a.out.empty()) {
        write_trials_csv(std::cout, records, true, !a.no_time);
    } else {
        auto out = open_out(a.out);
        write_trials_csv(out, records, true, !a.no_time);
    }
    auto rows = summarize(records);
    if (!a.summary.empty()) {
        auto out = open_out(a.summary);
        write_summary_csv(out, rows);
    }
    write_summary_text(std::cerr, rows);
    return 0;
}

struct CaseArgs {
    std::vector<std::string> graphs;
    std::string algo;
    std::string ks;
    std::size_t runs = 100;
    std::optional<std::size_t> table_k;
    std::optional<std::uint64_t> seed;
    bool stop_on_proper = false;
    bool drop_isolated = false;
    std::string out, witness_dir, config;
    std::vector<std::string> sets;
};

std::vector<std::size_t> parse_k_range(const std::string& s)
{
    std::vector<std::size_t> ks;
    auto dash = s.find('-');
    auto num = [&](const std::string& t) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != t.size() || v < 1)
            throw InputError("bad k range '" + s + "'");
        return std::size_t(v);
    };
    if (dash == std::string::npos)
        return {num(s)};
    std::size_t lo = num(s.substr(0, dash)), hi = num(s.substr(dash + 1));
    if (lo > hi)
        throw InputError("bad k range '" + s + "'");
    for (std::size_t k = lo; k <= hi; ++k)
        ks.push_back(k);
    return ks;
}

int cmd_case_study(const CaseArgs& a)
{
    CaseStudyOptions opt;
    Algorithm algo = parse_algorithm(a.algo);
    opt.k_range = parse_k_range(a.ks);
    opt.runs = a.runs;
    opt.table_k = a.table_k;
    opt.base_seed = pick_seed(a.seed);
    opt.stop_on_proper = a.stop_on_proper;
    apply_settings(opt.train, a.config, a.sets);
    if (opt.table_k
        && std::find(opt.k_range.begin(), opt.k_range.end(), *opt.table_k) == opt.k_range.end())
        throw InputError("--table-k must lie in the k range");

    std::vector<std::pair<std::string, Graph>> inputs;
    for (const auto& path : a.graphs)
        inputs.emplace_back(std::filesystem::path(path).stem().string(),
                            load_graph(path, {a.drop_isolated, nullptr}));

    std::vector<CaseStudyRow> rows;
    for (const auto& [name, g] : inputs) {
        rows.push_back(case_study(g, name, algo, opt));
        if (!a.witness_dir.empty()) {
            std::filesystem::create_directories(a.witness_dir);
            for (const auto& [k, c] : rows.back().witnesses) {
                auto out = open_out(a.witness_dir + "/" + name + ".k" + std::to_string(k) + ".txt");
                write_coloring(out, c);
            }
        }
    }
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_case_study_csv(out, rows);
    }
    write_case_study_text(std::cout, rows);
    return 0;
}

struct OversmoothArgs {
    std::vector<std::size_t> ns;
    int depth = 2;
    double dropout = 0.1;
    double tol = 0.01;
    std::optional<std::uint64_t> seed;
    std::string config;
    std::vector<std::string> sets;
};

int cmd_oversmooth(const OversmoothArgs& a)
{
    OversmoothingOptions opt;
    opt.depth = a.depth;
    opt.dropout = a.dropout;
    opt.tol = a.tol;
    opt.base_seed = pick_seed(a.seed);
    apply_settings(opt.train, a.config, a.sets);
    std::cout << "n,depth,dropout,density\n";
    for (std::size_t n : a.ns) {
        opt.n = n;
        auto p = oversmoothing_threshold(opt);
        std::cout << n << ',' << a.depth << ',' << a.dropout << ',';
        if (p)
            std::cout << std::fixed << std::setprecision(2) << *p << std::defaultfloat;
        else
            std::cout << "none";
        std::cout << std::endl;
    }
    return 0;
}

struct GradArgs {
    std::string graph;
    std::size_t n = 10;
    double d = 3.0;
    std::size_t k = 3;
    int depth = 1;
    int features = 8;
    std::string loss = "degree-power:3";
    std::string target = "coloring";
    double tol = 1e-4;
    std::uint64_t seed = 0;
};

int cmd_grad_check(const GradArgs& a)
{
    if (a.k < 1)
        throw InputError("-k must be at least 1");
    Graph g = a.graph.empty() ? gen_erdos_renyi(a.n, a.d, a.seed) : load_graph(a.graph);
    TrainConfig cfg;
    cfg.depth = a.depth;
    cfg.features = a.features;
    cfg.init = InitScheme::normal;
    cfg.loss = LossFamily::parse(a.loss);
    cfg.validate();
    SearchRng rng(a.seed);
    ModelParams params = init_params(g.order(), a.k, cfg, rng);
    Objective obj;
    if (a.target == "coloring") {
        obj = Objective::coloring(g, cfg.loss);
    } else if (a.target == "warmstart") {
        SearchRng crng = rng.split();
        obj = Objective::warmstart(warmstart_target(random_coloring(g.order(), a.k, crng), a.k));
    } else {
        throw InputError("--target must be coloring or warmstart");
    }
    auto r = gradient_check(params, normalize_adjacency(g), cfg, obj);
    bool ok = r.max_rel_error <= a.tol;
    std::cout << "max_rel_error=" << r.max_rel_error << " entries=" << r.checked
              << " ok=" << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximate graph k-coloring: local search and GCN optimizers"};
    app.require_subcommand(1);
    int status = 0;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a graph");
    g->add_option("--family", gen.family, "er|regular|cycle|complete|grid|hex|tri|max-planar|replica")
        ->required();
    g->add_option("-n", gen.n, "Vertex count");
    g->add_option("-d", gen.d, "Average degree (er)");
    g->add_option("-r", gen.r, "Degree (regular)");
    g->add_option("--dims", gen.dims, "Grid side lengths")->delimiter(',');
    g->add_option("--rows", gen.rows, "Lattice rows");
    g->add_option("--cols", gen.cols, "Lattice columns");
    g->add_option("--degrees-from", gen.degrees_from, "Graph whose degree sequence a replica follows");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--out", gen.out, "Output graph file");
    g->add_option("--format", gen.format, "edges|col")->check(CLI::IsMember({"edges", "col"}));
    g->callback([&] { status = cmd_gen(gen); });

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Color a graph file");
    s->add_option("graph", solve.graph, "Graph file (.col for DIMACS, otherwise edge list)")->required();
    s->add_option("--algo", solve.algo, "discrete|full|triple|mod-gcn|full-gcn")->required();
    s->add_option("-k", solve.k, "Color budget")->required();
    s->add_option("--seed", solve.seed, "Random seed");
    s->add_option("--out", solve.out, "Write the coloring, one color per line");
    s->add_option("--soft-out", solve.soft_out, "Write the soft coloring as CSV (GCN only)");
    s->add_option("--trace-out", solve.trace_out, "Write the per-epoch trace as CSV (GCN only)");
    s->add_option("--config", solve.config, "Trainer settings file (key=value)");
    s->add_option("--set", solve.sets, "Trainer setting key=value");
    s->add_flag("--drop-isolated", solve.drop_isolated, "Remove degree-0 vertices");
    s->callback([&] { status = cmd_solve(solve); });

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run a trial grid from a config file");
    b->add_option("config", bench.config, "Config file (key=value)")->required();
    b->add_option("--out", bench.out, "CSV output (default stdout)");
    b->add_option("--summary", bench.summary, "Summary CSV output");
    b->add_option("--jobs", bench.jobs, "Parallel trials");
    b->add_flag("--no-time", bench.no_time, "Write ms as 0 for byte-identical reruns");
    b->callback([&] { status = cmd_bench(bench); });

    CaseArgs cs;
    auto* c = app.add_subcommand("case-study", "Best-of-R runs per k on fixed graphs");
    c->add_option("graphs", cs.graphs, "Graph files")->required();
    c->add_option("--algo", cs.algo, "Algorithm")->required();
    c->add_option("-k", cs.ks, "Budget or range lo-hi")->required();
    c->add_option("--runs", cs.runs, "Runs per k");
    c->add_option("--table-k", cs.table_k, "k reported in the best_loss column");
    c->add_option("--seed", cs.seed, "Base seed");
    c->add_flag("--stop-on-proper", cs.stop_on_proper, "Stop runs at a k after the first proper coloring");
    c->add_flag("--drop-isolated", cs.drop_isolated, "Remove degree-0 vertices");
    c->add_option("--out", cs.out, "Table CSV");
    c->add_option("--witness-dir", cs.witness_dir, "Directory for best colorings");
    c->add_option("--config", cs.config, "Trainer settings file");
    c->add_option("--set", cs.sets, "Trainer setting key=value");
    c->callback([&] { status = cmd_case_study(cs); });

    OversmoothArgs os;
    auto* o = app.add_subcommand("oversmooth", "Density threshold search for oversmoothing");
    o->add_option("-n", os.ns, "Vertex counts")->required()->delimiter(',');
    o->add_option("--depth", os.depth, "GCN depth (1 or 2)");
    o->add_option("--dropout", os.dropout, "Dropout rate");
    o->add_option("--tol", os.tol, "Uniformity tolerance");
    o->add_option("--seed", os.seed, "Base seed");
    o->add_option("--config", os.config, "Trainer settings file");
    o->add_option("--set", os.sets, "Trainer setting key=value");
    o->callback([&] { status = cmd_oversmooth(os); });

    GradArgs ga;
    auto* gc = app.add_subcommand("grad-check", "Compare analytic and finite-difference gradients");
    gc->add_option("--graph", ga.graph, "Graph file (default: random ER graph)");
    gc->add_option("-n", ga.n, "Vertices of the random graph");
    gc->add_option("-d", ga.d, "Average degree of the random graph");
    gc->add_option("-k", ga.k, "Colors");
    gc->add_option("--depth", ga.depth, "GCN depth");
    gc->add_option("--features", ga.features, "Feature width");
    gc->add_option("--loss", ga.loss, "standard|triangle|degree-power:<p>");
    gc->add_option("--target", ga.target, "coloring|warmstart");
    gc->add_option("--tol", ga.tol, "Maximum relative error");
    gc->add_option("--seed", ga.seed, "Random seed");
    gc->callback([&] { status = cmd_grad_check(ga); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
