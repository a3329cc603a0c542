#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "gcolor/coloring.hpp"
#include "gcolor/error.hpp"
#include "gcolor/generators.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/local_search.hpp"
#include "gcolor/rng.hpp"
#include "gcolor/stats.hpp"
#include "gcolor/train.hpp"

namespace gcolor {

enum class Algorithm { discrete, full, triple, mod_gcn, full_gcn };

inline std::string algorithm_name(Algorithm a)
{
    switch (a) {
    case Algorithm::discrete:
        return "discrete";
    case Algorithm::full:
        return "full";
    case Algorithm::triple:
        return "triple";
    case Algorithm::mod_gcn:
        return "mod-gcn";
    case Algorithm::full_gcn:
        return "full-gcn";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s)
{
    for (auto a : {Algorithm::discrete, Algorithm::full, Algorithm::triple, Algorithm::mod_gcn,
                   Algorithm::full_gcn})
        if (algorithm_name(a) == s)
            return a;
    throw InputError("unknown algorithm '" + s + "'");
}

/// Runs one algorithm once. Discrete-Color starts from a uniformly random
/// k-coloring; the GCN variants take everything but the seed from `cfg`.
inline HardColoring solve(const Graph& g, Algorithm algo, std::size_t k, std::uint64_t seed,
                          const TrainConfig& cfg = {})
{
    if (k < 1)
        throw InputError("k must be at least 1");
    SearchRng rng(seed);
    switch (algo) {
    case Algorithm::discrete: {
        auto init = random_coloring(g.order(), k, rng);
        return discrete_color(g, k, init, rng);
    }
    case Algorithm::full:
        return full_color(g, k, rng);
    case Algorithm::triple:
        return triple_color(g, k, rng);
    case Algorithm::mod_gcn:
    case Algorithm::full_gcn: {
        TrainConfig run = cfg;
        run.seed = seed;
        auto r = algo == Algorithm::mod_gcn ? mod_gcn(g, k, run) : full_gcn(g, k, run);
        return r.hard;
    }
    }
    throw std::logic_error("unhandled algorithm");
}

struct ErdosRenyiSpec {
    std::size_t n;
    double d;
};
struct RegularSpec {
    std::size_t n, r;
};
struct MaxPlanarSpec {
    std::size_t n;
};
/// A fixed graph shared by every trial.
struct NamedGraph {
    std::string name;
    std::shared_ptr<const Graph> graph;
};

using GraphSpec = std::variant<ErdosRenyiSpec, RegularSpec, MaxPlanarSpec, FamilySpec, NamedGraph>;

inline std::string family_name(const GraphSpec& spec)
{
    struct {
        std::string operator()(const ErdosRenyiSpec&) const { return "er"; }
        std::string operator()(const RegularSpec&) const { return "regular"; }
        std::string operator()(const MaxPlanarSpec&) const { return "max-planar"; }
        std::string operator()(const NamedGraph& s) const { return s.name; }
        std::string operator()(const FamilySpec& f) const
        {
            static const char* names[] = {"cycle", "complete", "grid", "hex", "tri"};
            return names[f.index()];
        }
    } visitor;
    return std::visit(visitor, spec);
}

inline bool is_random_family(const GraphSpec& spec)
{
    return std::holds_alternative<ErdosRenyiSpec>(spec) || std::holds_alternative<RegularSpec>(spec)
           || std::holds_alternative<MaxPlanarSpec>(spec);
}

/// The graph for one trial; random families draw from `seed`.
inline Graph instantiate(const GraphSpec& spec, std::uint64_t seed)
{
    struct {
        std::uint64_t seed;
        Graph operator()(const ErdosRenyiSpec& s) const { return gen_erdos_renyi(s.n, s.d, seed); }
        Graph operator()(const RegularSpec& s) const { return gen_regular(s.n, s.r, seed); }
        Graph operator()(const MaxPlanarSpec& s) const { return gen_max_planar(s.n, seed); }
        Graph operator()(const FamilySpec& s) const { return gen_family(s); }
        Graph operator()(const NamedGraph& s) const { return *s.graph; }
    } visitor{seed};
    return std::visit(visitor, spec);
}

/// Nominal average degree: the generator parameter where there is one,
/// otherwise 2m/n of the instance.
inline double nominal_degree(const GraphSpec& spec, const Graph& g)
{
    if (auto* er = std::get_if<ErdosRenyiSpec>(&spec))
        return er->d;
    if (auto* reg = std::get_if<RegularSpec>(&spec))
        return double(reg->r);
    return g.order() ? 2.0 * double(g.size()) / double(g.order()) : 0.0;
}

struct TrialRecord {
    std::string algo;
    std::string family;
    std::size_t n = 0;
    double d = 0.0;
    std::size_t k = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;  // trial seed; the instance is drawn from it too
    std::size_t loss = 0;
    bool proper = false;
    double ms = 0.0;
};

struct TrialOptions {
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    unsigned jobs = 1;
    TrainConfig train;
};

namespace detail {

/// Calls body(i) for i in [0, count) on up to `jobs` threads and rethrows
/// the first failure.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex lock;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard guard(lock);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace detail

/// Trial i uses seed derive_seed(base_seed, i) for both the instance (random
/// families) and the solver, so algorithms run with the same base seed see
/// the same graphs. Records come back in trial order for any `jobs`.
inline std::vector<TrialRecord> run_trials(Algorithm algo, const GraphSpec& spec, std::size_t k,
                                           const TrialOptions& opt)
{
    if (opt.trials < 1)
        throw InputError("trials must be at least 1");
    std::vector<TrialRecord> records(opt.trials);
    detail::parallel_for(opt.trials, opt.jobs, [&](std::size_t i) {
        std::uint64_t seed = derive_seed(opt.base_seed, i);
        Graph g = instantiate(spec, seed);
        auto start = std::chrono::steady_clock::now();
        HardColoring c = solve(g, algo, k, derive_seed(seed, 1), opt.train);
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::size_t loss = loss_hard(g, c);
        records[i] = {algorithm_name(algo), family_name(spec), g.order(), nominal_degree(spec, g), k, i,
                      seed, loss, loss == 0, std::max(ms, 1e-6)};
    });
    return records;
}

inline const char* trials_csv_header() { return "algo,family,n,d,k,trial,seed,loss,proper,ms"; }

/// With `timing` false the ms column is written as 0 so that reruns are
/// byte-identical.
inline void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                             bool header = true, bool timing = true)
{
    if (header)
        out << trials_csv_header() << '\n';
    for (const auto& r : records) {
        std::ostringstream d;
        d << std::setprecision(10) << r.d;
        out << r.algo << ',' << r.family << ',' << r.n << ',' << d.str() << ',' << r.k << ',' << r.trial
            << ',' << r.seed << ',' << r.loss << ',' << (r.proper ? 1 : 0) << ',';
        if (timing)
            out << std::fixed << std::setprecision(3) << r.ms << std::defaultfloat;
        else
            out << 0;
        out << '\n';
    }
}

struct SummaryRow {
    std::string algo, family;
    std::size_t n = 0;
    double d = 0.0;
    std::size_t k = 0;
    std::size_t trials = 0;
    std::size_t proper = 0;
    double mean = 0.0;
    double halfwidth = 0.0;  // 0 for a single trial
};

/// Groups records by (algo, family, n, d, k) in first-seen order.
inline std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records)
{
    std::vector<SummaryRow> rows;
    std::vector<std::vector<double>> samples;
    for (const auto& r : records) {
        std::size_t i = 0;
        while (i < rows.size()
               && !(rows[i].algo == r.algo && rows[i].family == r.family && rows[i].n == r.n
                    && rows[i].d == r.d && rows[i].k == r.k))
            ++i;
        if (i == rows.size()) {
            SummaryRow fresh;
            fresh.algo = r.algo;
            fresh.family = r.family;
            fresh.n = r.n;
            fresh.d = r.d;
            fresh.k = r.k;
            rows.push_back(fresh);
            samples.emplace_back();
        }
        samples[i].push_back(double(r.loss));
        ++rows[i].trials;
        rows[i].proper += r.proper;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (samples[i].size() >= 2) {
            auto ci = confidence_interval(samples[i]);
            rows[i].mean = ci.mean;
            rows[i].halfwidth = ci.halfwidth;
        } else {
            rows[i].mean = samples[i].front();
        }
    }
    return rows;
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows)
{
    out << "algo,family,n,d,k,trials,proper,mean_loss,ci95\n";
    for (const auto& r : rows)
        out << r.algo << ',' << r.family << ',' << r.n << ',' << r.d << ',' << r.k << ',' << r.trials
            << ',' << r.proper << ',' << std::setprecision(6) << r.mean << ',' << r.halfwidth
            << std::setprecision(6) << '\n';
}

inline void write_summary_text(std::ostream& out, const std::vector<SummaryRow>& rows)
{
    out << std::left << std::setw(10) << "algo" << std::setw(12) << "family" << std::right
        << std::setw(7) << "n" << std::setw(8) << "d" << std::setw(5) << "k" << std::setw(8)
        << "trials" << std::setw(8) << "proper" << std::setw(12) << "mean" << std::setw(10) << "ci95"
        << '\n';
    for (const auto& r : rows)
        out << std::left << std::setw(10) << r.algo << std::setw(12) << r.family << std::right
            << std::setw(7) << r.n << std::setw(8) << r.d << std::setw(5) << r.k << std::setw(8)
            << r.trials << std::setw(8) << r.proper << std::setw(12) << std::fixed
            << std::setprecision(3) << r.mean << std::setw(10) << r.halfwidth << std::defaultfloat
            << '\n';
}

struct CaseStudyOptions {
    std::vector<std::size_t> k_range;
    std::size_t runs = 100;
    std::uint64_t base_seed = 0;
    /// k whose best loss goes in the row; defaults to the largest in k_range.
    std::optional<std::size_t> table_k;
    /// Skip remaining runs at a k once a proper coloring is found. chi_star
    /// is then left unset.
    bool stop_on_proper = false;
    TrainConfig train;
};

struct CaseStudyRow {
    std::string name;
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t k = 0;
    std::size_t best_loss = 0;
    std::optional<std::size_t> chi;       // smallest k with at least one proper run
    std::optional<std::size_t> chi_star;  // smallest k with every run proper
    std::map<std::size_t, std::size_t> best_by_k;
    std::map<std::size_t, HardColoring> witnesses;  // best coloring per k
};

/// Run r at budget k uses seed derive_seed(derive_seed(base_seed, k), r).
/// chi is only claimed after re-checking the stored witness.
inline CaseStudyRow case_study(const Graph& g, const std::string& name, Algorithm algo,
                               const CaseStudyOptions& opt)
{
    if (opt.k_range.empty())
        throw InputError("case study needs at least one k");
    if (opt.runs < 1)
        throw InputError("case study needs at least one run");
    CaseStudyRow row;
    row.name = name;
    row.order = g.order();
    row.size = g.size();
    row.k = opt.table_k ? *opt.table_k : *std::max_element(opt.k_range.begin(), opt.k_range.end());
    for (std::size_t k : opt.k_range) {
        std::uint64_t k_seed = derive_seed(opt.base_seed, k);
        std::optional<std::size_t> best;
        std::size_t proper_runs = 0, done = 0;
        for (std::size_t r = 0; r < opt.runs; ++r) {
            HardColoring c = solve(g, algo, k, derive_seed(k_seed, r), opt.train);
            std::size_t loss = loss_hard(g, c);
            ++done;
            proper_runs += loss == 0;
            if (!best || loss < *best) {
                best = loss;
                row.witnesses[k] = std::move(c);
            }
            if (loss == 0 && opt.stop_on_proper)
                break;
        }
        row.best_by_k[k] = *best;
        if (loss_hard(g, row.witnesses[k]) == 0 && (!row.chi || k < *row.chi))
            row.chi = k;
        if (!opt.stop_on_proper && proper_runs == done && (!row.chi_star || k < *row.chi_star))
            row.chi_star = k;
    }
    auto it = row.best_by_k.find(row.k);
    if (it == row.best_by_k.end())
        throw InputError("table k is not in the k range");
    row.best_loss = it->second;
    return row;
}

inline void write_case_study_csv(std::ostream& out, const std::vector<CaseStudyRow>& rows)
{
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
    out << "graph,order,size,k,best_loss,chi,chi_star\n";
    for (const auto& r : rows)
        out << r.name << ',' << r.order << ',' << r.size << ',' << r.k << ',' << r.best_loss << ','
            << opt(r.chi) << ',' << opt(r.chi_star) << '\n';
}

inline void write_case_study_text(std::ostream& out, const std::vector<CaseStudyRow>& rows)
{
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << std::left << std::setw(14) << "graph" << std::right << std::setw(7) << "order" << std::setw(7)
        << "size" << std::setw(5) << "k" << std::setw(10) << "best_loss" << std::setw(6) << "chi"
        << std::setw(9) << "chi_star" << '\n';
    for (const auto& r : rows)
        out << std::left << std::setw(14) << r.name << std::right << std::setw(7) << r.order << std::setw(7)
            << r.size << std::setw(5) << r.k << std::setw(10) << r.best_loss << std::setw(6) << opt(r.chi)
            << std::setw(9) << opt(r.chi_star) << '\n';
}

/// Densities searched by the oversmoothing experiment: 0.10, 0.11, ..., 1.00.
inline double density_grid(std::size_t index) { return double(10 + index) / 100.0; }
inline constexpr std::size_t kDensityGridSize = 91;

/// Smallest grid density for which `triggers` is true, assuming it is
/// monotone in the density; none if even 1.00 does not trigger.
inline std::optional<double> threshold_search(const std::function<bool(double)>& triggers)
{
    std::size_t lo = 0, hi = kDensityGridSize - 1;
    if (!triggers(density_grid(hi)))
        return std::nullopt;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (triggers(density_grid(mid)))
            hi = mid;
        else
            lo = mid + 1;
    }
    return density_grid(hi);
}

struct OversmoothingOptions {
    std::size_t n = 60;
    int depth = 2;
    double dropout = 0.1;
    std::uint64_t base_seed = 0;
    double tol = 0.01;
    TrainConfig train;
};

/// One probe: n-coloring Mod-GCN run on ER(n, p (n-1)); true iff its final
/// soft coloring is uniform within tol.
inline bool oversmoothing_probe(double p, const OversmoothingOptions& opt)
{
    auto step = std::size_t(std::lround(p * 100.0));
    std::uint64_t seed = derive_seed(opt.base_seed, step);
    double d = std::min(p * double(opt.n - 1), double(opt.n - 1));
    Graph g = gen_erdos_renyi(opt.n, d, seed);
    TrainConfig cfg = opt.train;
    cfg.depth = opt.depth;
    cfg.dropout = opt.dropout;
    cfg.seed = derive_seed(seed, 1);
    return detect_oversmoothing(mod_gcn(g, opt.n, cfg).final_soft, opt.tol);
}

inline std::optional<double> oversmoothing_threshold(const OversmoothingOptions& opt)
{
    if (opt.depth < 1 || opt.depth > 2)
        throw InputError("oversmoothing search expects depth 1 or 2");
    if (opt.n < 2)
        throw InputError("oversmoothing search needs n >= 2");
    return threshold_search([&](double p) { return oversmoothing_probe(p, opt); });
}

/// key=value lines; '#' starts a comment. Keys are unique.
using ConfigMap = std::map<std::string, std::string>;

inline ConfigMap parse_config(std::istream& in)
{
    ConfigMap out;
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw InputError("config line " + std::to_string(line_no) + ": empty key");
        if (!out.emplace(key, value).second)
            throw InputError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    return out;
}

inline ConfigMap load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open config file '" + path + "'");
    return parse_config(in);
}

namespace detail {

inline long long to_integer(const std::string& key, const std::string& v)
{
    std::size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw InputError("'" + key + "' expects an integer, got '" + v + "'");
    return x;
}

inline double to_real(const std::string& key, const std::string& v)
{
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw InputError("'" + key + "' expects a number, got '" + v + "'");
    return x;
}

inline std::vector<std::string> split_list(const std::string& v)
{
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos)
            out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

} // namespace detail

/// Applies one trainer setting; returns false for keys the trainer does not
/// know.
inline bool apply_train_setting(TrainConfig& cfg, const std::string& key, const std::string& value)
{
    using detail::to_integer;
    using detail::to_real;
    if (key == "depth")
        cfg.depth = int(to_integer(key, value));
    else if (key == "features")
        cfg.features = int(to_integer(key, value));
    else if (key == "init")
        cfg.init = parse_init_scheme(value);
    else if (key == "loss")
        cfg.loss = LossFamily::parse(value);
    else if (key == "lr" || key == "learning_rate")
        cfg.learning_rate = to_real(key, value);
    else if (key == "dropout")
        cfg.dropout = to_real(key, value);
    else if (key == "beta1")
        cfg.beta1 = to_real(key, value);
    else if (key == "beta2")
        cfg.beta2 = to_real(key, value);
    else if (key == "epsilon")
        cfg.epsilon = to_real(key, value);
    else if (key == "weight_decay")
        cfg.weight_decay = to_real(key, value);
    else if (key == "max_epochs")
        cfg.max_epochs = int(to_integer(key, value));
    else if (key == "patience")
        cfg.patience = int(to_integer(key, value));
    else if (key == "min_improvement")
        cfg.min_improvement = to_real(key, value);
    else if (key == "pretrain_max_epochs")
        cfg.pretrain_max_epochs = int(to_integer(key, value));
    else if (key == "pretrain_patience")
        cfg.pretrain_patience = int(to_integer(key, value));
    else
        return false;
    return true;
}

/// A grid of trial batteries: every (n, d) cell crossed with every algorithm.
///
///   family  = er | regular | cycle | complete | max-planar
///   n       = 100,110,120        (list)
///   d       = 10,16              (er: average degree, regular: r; list)
///   k       = 5 | kd | kd+1      (kd+c uses k_d of the cell's d)
///   algos   = discrete,full      (list)
///   trials  = 200
///   seed    = 1
/// plus any trainer key (depth, features, init, loss, lr, dropout, ...).
struct BenchConfig {
    std::string family = "er";
    std::vector<std::size_t> ns;
    std::vector<double> ds{0.0};
    std::string k = "kd+1";
    std::vector<Algorithm> algos;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    TrainConfig train;

    static BenchConfig from_map(const ConfigMap& map)
    {
        BenchConfig c;
        bool have_n = false, have_algos = false;
        for (const auto& [key, value] : map) {
            if (key == "family") {
                c.family = value;
            } else if (key == "n") {
                c.ns.clear();
                for (auto& s : detail::split_list(value)) {
                    auto x = detail::to_integer(key, s);
                    if (x < 1)
                        throw InputError("n must be positive");
                    c.ns.push_back(std::size_t(x));
                }
                have_n = !c.ns.empty();
            } else if (key == "d") {
                c.ds.clear();
                for (auto& s : detail::split_list(value))
                    c.ds.push_back(detail::to_real(key, s));
            } else if (key == "k") {
                c.k = value;
            } else if (key == "algos") {
                for (auto& s : detail::split_list(value))
                    c.algos.push_back(parse_algorithm(s));
                have_algos = !c.algos.empty();
            } else if (key == "trials") {
                auto x = detail::to_integer(key, value);
                if (x < 1)
                    throw InputError("trials must be positive");
                c.trials = std::size_t(x);
            } else if (key == "seed") {
                c.seed = std::uint64_t(detail::to_integer(key, value));
            } else if (!apply_train_setting(c.train, key, value)) {
                throw InputError("unknown config key '" + key + "'");
            }
        }
        if (!have_n)
            throw InputError("config needs 'n'");
        if (!have_algos)
            throw InputError("config needs 'algos'");
        if (c.ds.empty())
            throw InputError("'d' must list at least one value");
        static const std::vector<std::string> families{"er", "regular", "cycle", "complete", "max-planar"};
        if (std::find(families.begin(), families.end(), c.family) == families.end())
            throw InputError("unsupported bench family '" + c.family + "'");
        c.train.validate();
        for (double d : c.ds)
            (void)c.budget(d);
        return c;
    }

    std::size_t budget(double d) const
    {
        if (k.rfind("kd", 0) == 0) {
            long long offset = 0;
            if (k.size() > 2) {
                if (k[2] != '+' && k[2] != '-')
                    throw InputError("k must be an integer or kd[+-c]");
                offset = detail::to_integer("k", k.substr(k[2] == '+' ? 3 : 2));
            }
            if (!(d > 0.0))
                throw InputError("k = kd needs a positive d");
            long long value = (long long)(k_d(d)) + offset;
            if (value < 1)
                throw InputError("k must be at least 1");
            return std::size_t(value);
        }
        auto x = detail::to_integer("k", k);
        if (x < 1)
            throw InputError("k must be at least 1");
        return std::size_t(x);
    }

    GraphSpec cell(std::size_t n, double d) const
    {
        if (family == "er")
            return ErdosRenyiSpec{n, d};
        if (family == "regular")
            return RegularSpec{n, std::size_t(d)};
        if (family == "cycle")
            return FamilySpec{Cycle{n}};
        if (family == "complete")
            return FamilySpec{Complete{n}};
        return MaxPlanarSpec{n};
    }
};

/// Runs every cell of the grid in (d, n, algo) order with the config seed
/// as base seed for each battery.
inline std::vector<TrialRecord> run_bench(const BenchConfig& c, unsigned jobs = 1)
{
    std::vector<TrialRecord> all;
    for (double d : c.ds)
        for (std::size_t n : c.ns) {
            GraphSpec spec = c.cell(n, d);
            std::size_t k = c.budget(d);
            for (Algorithm a : c.algos) {
                TrialOptions opt{c.trials, derive_seed(c.seed, n), jobs, c.train};
                auto recs = run_trials(a, spec, k, opt);
                all.insert(all.end(), recs.begin(), recs.end());
            }
        }
    return all;
}

} // namespace gcolor
