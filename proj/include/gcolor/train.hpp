#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <vector>

#include "gcolor/coloring.hpp"
#include "gcolor/gcn.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

struct TraceRow {
    int epoch = 0;
    double soft_loss = 0.0;
    double best_soft_loss = 0.0;
    std::size_t hard_loss = 0;
};

using Trace = std::vector<TraceRow>;

inline void write_trace_csv(std::ostream& out, const Trace& trace)
{
    auto old = out.precision(17);
    out << "epoch,soft_loss,best_soft_loss,hard_loss\n";
    for (const auto& r : trace)
        out << r.epoch << ',' << r.soft_loss << ',' << r.best_soft_loss << ',' << r.hard_loss << '\n';
    out.precision(old);
}

struct GcnResult {
    SoftColoring soft;        // best-loss epoch
    HardColoring hard;        // rounding of `soft`
    SoftColoring final_soft;  // last parameters, evaluated without dropout
    ModelParams params;       // last parameters
    Trace trace;
};

/// Stops once the loss has failed to beat the reference value by more than
/// min_improvement for `patience` consecutive epochs, or at max_epochs.
class StoppingRule {
public:
    StoppingRule(int patience, int max_epochs, double min_improvement)
        : patience_(patience), max_epochs_(max_epochs), min_improvement_(min_improvement)
    {
    }

    /// Records the loss of `epoch`; returns true when training should stop.
    bool update(int epoch, double loss)
    {
        if (loss < reference_ - min_improvement_) {
            reference_ = loss;
            last_ = epoch;
        }
        return epoch + 1 >= max_epochs_ || epoch - last_ >= patience_;
    }

private:
    int patience_;
    int max_epochs_;
    double min_improvement_;
    double reference_ = std::numeric_limits<double>::infinity();
    int last_ = 0;
};

/// Mod-GCN: AdamW on the weighted coloring loss of softmax(F_W(X)).
inline GcnResult mod_gcn(const Graph& g, std::size_t k, const TrainConfig& cfg,
                         const std::optional<ModelParams>& warm = std::nullopt)
{
    if (k < 1)
        throw std::invalid_argument("color budget must be at least 1");
    cfg.validate();
    SearchRng rng(cfg.seed);
    SearchRng init_rng = rng.split();
    SearchRng dropout_rng = rng.split();

    auto adj = NormalizedAdjacency::build(g);
    auto objective = Objective::coloring(g, cfg.loss);
    ModelParams params = warm ? *warm : init_params(g.order(), k, cfg, init_rng);
    if (params.colors() != k)
        throw std::invalid_argument("warm-start parameters have the wrong output width");

    AdamW opt(AdamW::from_config(cfg));
    StoppingRule stop(cfg.patience, cfg.max_epochs, cfg.min_improvement);
    GcnResult out;
    Matrix best_p;
    double best = std::numeric_limits<double>::infinity();
    for (int epoch = 0;; ++epoch) {
        auto step = loss_and_grads(params, adj, cfg, objective, &dropout_rng);
        auto rounded = round_soft(SoftColoring(step.p));
        std::size_t hard = loss_hard(g, rounded);
        if (step.loss < best) {
            best = step.loss;
            best_p = step.p;
        }
        out.trace.push_back({epoch, step.loss, best, hard});
        if (stop.update(epoch, step.loss))
            break;
        opt.step(params, step.grads);
    }
    out.soft = SoftColoring(std::move(best_p));
    out.hard = round_soft(out.soft);
    out.final_soft = forward(params, adj, cfg, false).p;
    out.params = std::move(params);
    return out;
}

/// Target rows: 0.55 on the given color, 0.45 / (k - 1) elsewhere. With k = 1
/// the only row is (1).
inline Matrix warmstart_target(const HardColoring& phi, std::size_t k)
{
    if (phi.colors_used() > k)
        throw std::invalid_argument("coloring uses more than k colors");
    const auto n = Eigen::Index(phi.size());
    if (k == 1)
        return Matrix::Ones(n, 1);
    Matrix t = Matrix::Constant(n, Eigen::Index(k), 0.45 / double(k - 1));
    for (Eigen::Index i = 0; i < n; ++i)
        t(i, phi.colors[std::size_t(i)]) = 0.55;
    return t;
}

/// Fits fresh parameters so that softmax(F_W(X)) approaches the warm-start
/// target built from phi. Returns the final parameters.
inline ModelParams pretrain_warmstart(const Graph& g, std::size_t k, const HardColoring& phi,
                                      const TrainConfig& cfg, Trace* trace = nullptr)
{
    cfg.validate();
    if (phi.size() != g.order())
        throw std::invalid_argument("coloring does not match graph order");
    SearchRng rng(cfg.seed);
    SearchRng init_rng = rng.split();
    SearchRng dropout_rng = rng.split();

    auto adj = NormalizedAdjacency::build(g);
    auto objective = Objective::warmstart(warmstart_target(phi, k));
    ModelParams params = init_params(g.order(), k, cfg, init_rng);
    AdamW opt(AdamW::from_config(cfg));
    StoppingRule stop(cfg.pretrain_patience, cfg.pretrain_max_epochs, cfg.min_improvement);
    double best = std::numeric_limits<double>::infinity();
    for (int epoch = 0;; ++epoch) {
        auto step = loss_and_grads(params, adj, cfg, objective, &dropout_rng);
        best = std::min(best, step.loss);
        if (trace)
            trace->push_back({epoch, step.loss, best, 0});
        if (stop.update(epoch, step.loss))
            break;
        opt.step(params, step.grads);
    }
    return params;
}

/// Full-GCN: starting from the 1-coloring, for j = 2..k pretrain fresh
/// parameters on the (j-1)-coloring and run Mod-GCN with budget j from them.
inline GcnResult full_gcn(const Graph& g, std::size_t k, const TrainConfig& cfg)
{
    if (k < 1)
        throw std::invalid_argument("color budget must be at least 1");
    cfg.validate();
    GcnResult out;
    out.hard = HardColoring::uniform(g.order());
    out.soft = SoftColoring::one_hot(out.hard);
    out.final_soft = out.soft;
    for (std::size_t j = 2; j <= k; ++j) {
        TrainConfig stage = cfg;
        stage.seed = derive_seed(cfg.seed, j);
        ModelParams warm = pretrain_warmstart(g, j, out.hard, stage);
        out = mod_gcn(g, j, stage, warm);
    }
    return out;
}

/// True iff every probability is within tol of 1/k.
inline bool detect_oversmoothing(const SoftColoring& s, double tol)
{
    if (s.colors() == 0)
        return true;
    const double uniform = 1.0 / double(s.colors());
    return ((s.probs.array() - uniform).abs() < tol).all();
}

} // namespace gcolor
