#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>
#include <Eigen/SparseCore>

#include "gcolor/coloring.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Symmetric normalized adjacency without self-loops:
/// a(i,j) = 1 / sqrt(deg(i) deg(j)) on edges, zero elsewhere.
struct NormalizedAdjacency {
    SparseMatrix a;

    static NormalizedAdjacency build(const Graph& g)
    {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(2 * g.size());
        for (const auto& [u, v] : g.edges()) {
            double w = 1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
            trip.emplace_back(int(u), int(v), w);
            trip.emplace_back(int(v), int(u), w);
        }
        SparseMatrix a(Eigen::Index(g.order()), Eigen::Index(g.order()));
        a.setFromTriplets(trip.begin(), trip.end());
        return {std::move(a)};
    }

    std::size_t order() const noexcept { return std::size_t(a.rows()); }
};

inline NormalizedAdjacency normalize_adjacency(const Graph& g) { return NormalizedAdjacency::build(g); }

enum class InitScheme { orthogonal, identity, normal };

inline InitScheme parse_init_scheme(const std::string& s)
{
    if (s == "orthogonal")
        return InitScheme::orthogonal;
    if (s == "identity")
        return InitScheme::identity;
    if (s == "normal")
        return InitScheme::normal;
    throw InputError("unknown init scheme '" + s + "'");
}

struct TrainConfig {
    int depth = 1;
    int features = 200;
    InitScheme init = InitScheme::orthogonal;
    LossFamily loss = LossFamily::degree_power(3);
    double learning_rate = 0.001;
    double dropout = 0.0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double weight_decay = 0.01;
    int max_epochs = 100000;
    int patience = 1000;
    double min_improvement = 1e-4;
    int pretrain_max_epochs = 20000;
    int pretrain_patience = 500;
    std::uint64_t seed = 0;

    void validate() const
    {
        if (depth < 0 || depth > 4)
            throw InputError("depth must be in [0, 4]");
        if (features < 1)
            throw InputError("features must be positive");
        if (!(dropout >= 0.0 && dropout < 1.0))
            throw InputError("dropout must be in [0, 1)");
        if (!(learning_rate > 0.0))
            throw InputError("learning rate must be positive");
        if (max_epochs < 1 || patience < 1 || pretrain_max_epochs < 1 || pretrain_patience < 1)
            throw InputError("epoch budgets must be positive");
    }
};

/// Feature matrix X and per-layer weights. With depth 0, X holds the n x k
/// logits directly and w is empty.
struct ModelParams {
    Matrix x;
    std::vector<Matrix> w;

    std::size_t colors() const { return std::size_t(w.empty() ? x.cols() : w.back().cols()); }

    std::size_t count() const
    {
        std::size_t c = std::size_t(x.size());
        for (const auto& m : w)
            c += std::size_t(m.size());
        return c;
    }

    /// Visits X then each W_t in layer order.
    template <class F>
    void for_each(F&& f)
    {
        f(x);
        for (auto& m : w)
            f(m);
    }
};

namespace detail {

inline Matrix gaussian(Eigen::Index rows, Eigen::Index cols, SearchRng& rng)
{
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = rng.normal();
    return m;
}

} // namespace detail

/// normal: iid N(0,1). identity: row i is e_(i mod f). orthogonal: orthonormal
/// rows from the QR factorization of a Gaussian matrix when n <= f, otherwise
/// the identity scheme.
inline Matrix init_features(InitScheme scheme, std::size_t n, std::size_t f, SearchRng& rng)
{
    if (f < 1)
        throw std::invalid_argument("feature width must be positive");
    const auto rows = Eigen::Index(n), cols = Eigen::Index(f);
    if (scheme == InitScheme::normal)
        return detail::gaussian(rows, cols, rng);
    if (scheme == InitScheme::orthogonal && n <= f && n > 0) {
        Eigen::MatrixXd g = detail::gaussian(cols, rows, rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(cols, rows);
        // Fix column signs so the result is uniformly distributed.
        Eigen::MatrixXd r = qr.matrixQR().topRows(rows).triangularView<Eigen::Upper>();
        for (Eigen::Index j = 0; j < rows; ++j)
            if (r(j, j) < 0)
                q.col(j) = -q.col(j);
        return q.transpose();
    }
    Matrix x = Matrix::Zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        x(i, i % cols) = 1.0;
    return x;
}

inline Matrix init_features(InitScheme scheme, std::size_t n, std::size_t f, std::uint64_t seed)
{
    SearchRng rng(seed);
    return init_features(scheme, n, f, rng);
}

/// Fresh parameters: X from cfg.init, hidden width cfg.features, Glorot
/// uniform weights.
inline ModelParams init_params(std::size_t n, std::size_t k, const TrainConfig& cfg, SearchRng& rng)
{
    ModelParams p;
    if (cfg.depth == 0) {
        p.x = init_features(cfg.init, n, k, rng);
        return p;
    }
    const auto f = Eigen::Index(cfg.features);
    p.x = init_features(cfg.init, n, std::size_t(f), rng);
    for (int t = 0; t < cfg.depth; ++t) {
        Eigen::Index out = t + 1 == cfg.depth ? Eigen::Index(k) : f;
        double bound = std::sqrt(6.0 / double(f + out));
        Matrix w(f, out);
        for (Eigen::Index i = 0; i < f; ++i)
            for (Eigen::Index j = 0; j < out; ++j)
                w(i, j) = (2.0 * rng.uniform() - 1.0) * bound;
        p.w.push_back(std::move(w));
    }
    return p;
}

inline Matrix row_softmax(const Matrix& q)
{
    Matrix p(q.rows(), q.cols());
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        double top = q.row(i).maxCoeff();
        p.row(i) = (q.row(i).array() - top).exp();
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

/// Intermediate values kept for the backward pass.
struct ForwardCache {
    std::vector<Matrix> inputs;  // H_t fed to layer t
    std::vector<Matrix> pre;     // Z_t = A H_t W_t
    std::vector<Matrix> masks;   // dropout scale per hidden layer (empty if none)
    Matrix q;
    Matrix p;
};

inline void check_shapes(const ModelParams& params, const NormalizedAdjacency& adj, const TrainConfig& cfg)
{
    if (std::size_t(params.x.rows()) != adj.order())
        throw std::invalid_argument("feature rows do not match graph order");
    if (params.w.size() != std::size_t(cfg.depth))
        throw std::invalid_argument("weight count does not match depth");
    Eigen::Index width = params.x.cols();
    for (const auto& w : params.w) {
        if (w.rows() != width)
            throw std::invalid_argument("layer widths do not chain");
        width = w.cols();
    }
    if (width < 1)
        throw std::invalid_argument("output width must be positive");
}

/// Q = F_W(X), P = softmax(Q). Dropout acts on hidden activations only and
/// only when `dropout_rng` is given.
inline ForwardCache forward_cached(const ModelParams& params, const NormalizedAdjacency& adj,
                                   const TrainConfig& cfg, SearchRng* dropout_rng)
{
    check_shapes(params, adj, cfg);
    ForwardCache c;
    Matrix h = params.x;
    const std::size_t depth = params.w.size();
    for (std::size_t t = 0; t < depth; ++t) {
        Matrix hw = h * params.w[t];
        Matrix z = adj.a * hw;
        c.inputs.push_back(std::move(h));
        if (t + 1 == depth) {
            h = z;
            c.pre.push_back(std::move(z));
            c.masks.emplace_back();
            break;
        }
        h = z.cwiseMax(0.0);
        Matrix mask;
        if (dropout_rng && cfg.dropout > 0.0) {
            mask.resize(h.rows(), h.cols());
            const double keep = 1.0 / (1.0 - cfg.dropout);
            for (Eigen::Index i = 0; i < mask.rows(); ++i)
                for (Eigen::Index j = 0; j < mask.cols(); ++j)
                    mask(i, j) = dropout_rng->uniform() < cfg.dropout ? 0.0 : keep;
            h = h.cwiseProduct(mask);
        }
        c.pre.push_back(std::move(z));
        c.masks.push_back(std::move(mask));
    }
    c.q = std::move(h);
    c.p = row_softmax(c.q);
    return c;
}

struct ForwardResult {
    Matrix q;
    SoftColoring p;
};

inline ForwardResult forward(const ModelParams& params, const NormalizedAdjacency& adj,
                             const TrainConfig& cfg, bool training, SearchRng* dropout_rng = nullptr)
{
    if (training && cfg.dropout > 0.0 && !dropout_rng)
        throw std::invalid_argument("training-mode dropout needs a random stream");
    auto c = forward_cached(params, adj, cfg, training ? dropout_rng : nullptr);
    return {std::move(c.q), SoftColoring(std::move(c.p))};
}

/// What the network is fitted to: the weighted coloring loss
/// 1/2 sum_ij aw(i,j) <p_i, p_j>, or the squared Frobenius distance to a
/// fixed target matrix.
struct Objective {
    enum class Kind { coloring, warmstart };

    Kind kind = Kind::coloring;
    SparseMatrix weighted;
    Matrix target;

    static Objective coloring(const Graph& g, const LossSpec& spec)
    {
        if (spec.edge_weights.size() != g.size())
            throw std::invalid_argument("loss spec was built for a different graph");
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(2 * g.size());
        auto edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            trip.emplace_back(int(edges[e].first), int(edges[e].second), spec.edge_weights[e]);
            trip.emplace_back(int(edges[e].second), int(edges[e].first), spec.edge_weights[e]);
        }
        Objective o;
        o.weighted.resize(Eigen::Index(g.order()), Eigen::Index(g.order()));
        o.weighted.setFromTriplets(trip.begin(), trip.end());
        return o;
    }

    static Objective coloring(const Graph& g, LossFamily family)
    {
        return coloring(g, LossSpec::build(g, family));
    }

    static Objective warmstart(Matrix target)
    {
        Objective o;
        o.kind = Kind::warmstart;
        o.target = std::move(target);
        return o;
    }

    /// Loss value and its gradient with respect to P.
    double evaluate(const Matrix& p, Matrix* grad) const
    {
        if (kind == Kind::coloring) {
            if (weighted.rows() != p.rows())
                throw std::invalid_argument("objective built for a different graph");
            Matrix ap = weighted * p;
            double loss = 0.5 * ap.cwiseProduct(p).sum();
            if (grad)
                *grad = std::move(ap);
            return loss;
        }
        if (target.rows() != p.rows() || target.cols() != p.cols())
            throw std::invalid_argument("warm-start target shape mismatch");
        Matrix diff = p - target;
        double loss = diff.squaredNorm();
        if (grad)
            *grad = 2.0 * diff;
        return loss;
    }
};

/// Gradients share the layout of ModelParams.
using Gradients = ModelParams;

struct LossAndGrads {
    double loss = 0.0;
    Gradients grads;
    Matrix p;
};

/// Forward plus reverse pass. Pass `dropout_rng` only for training steps.
inline LossAndGrads loss_and_grads(const ModelParams& params, const NormalizedAdjacency& adj,
                                   const TrainConfig& cfg, const Objective& objective,
                                   SearchRng* dropout_rng = nullptr)
{
    ForwardCache c = forward_cached(params, adj, cfg, dropout_rng);
    LossAndGrads out;
    Matrix gp;
    out.loss = objective.evaluate(c.p, &gp);

    // softmax: dQ = P .* (dP - rowsum(dP .* P))
    Eigen::VectorXd inner = gp.cwiseProduct(c.p).rowwise().sum();
    Matrix g = c.p.cwiseProduct(gp - inner.replicate(1, gp.cols()));

    const std::size_t depth = params.w.size();
    out.grads.w.resize(depth);
    for (std::size_t t = depth; t-- > 0;) {
        if (t + 1 != depth) {
            if (c.masks[t].size() != 0)
                g = g.cwiseProduct(c.masks[t]);
            g = g.cwiseProduct((c.pre[t].array() > 0.0).cast<double>().matrix());
        }
        Matrix ag = adj.a * g;  // symmetric, so A^T g = A g
        out.grads.w[t] = c.inputs[t].transpose() * ag;
        g = ag * params.w[t].transpose();
    }
    out.grads.x = std::move(g);
    out.p = std::move(c.p);
    return out;
}

/// AdamW with decoupled weight decay applied to the weights only; X is an
/// embedding and is not decayed.
class AdamW {
public:
    struct Hyper {
        double lr = 0.001;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double epsilon = 1e-8;
        double weight_decay = 0.01;
    };

    AdamW() = default;
    explicit AdamW(Hyper h) : h_(h) {}

    static Hyper from_config(const TrainConfig& cfg)
    {
        return {cfg.learning_rate, cfg.beta1, cfg.beta2, cfg.epsilon, cfg.weight_decay};
    }

    std::size_t steps() const noexcept { return step_; }

    void step(ModelParams& params, const Gradients& grads)
    {
        if (grads.w.size() != params.w.size())
            throw std::invalid_argument("gradient layout mismatch");
        if (step_ == 0) {
            m_.x = Matrix::Zero(params.x.rows(), params.x.cols());
            v_.x = m_.x;
            for (const auto& w : params.w) {
                m_.w.push_back(Matrix::Zero(w.rows(), w.cols()));
                v_.w.push_back(Matrix::Zero(w.rows(), w.cols()));
            }
        }
        ++step_;
        const double c1 = 1.0 - std::pow(h_.beta1, double(step_));
        const double c2 = 1.0 - std::pow(h_.beta2, double(step_));
        update(params.x, grads.x, m_.x, v_.x, 0.0, c1, c2);
        for (std::size_t t = 0; t < params.w.size(); ++t)
            update(params.w[t], grads.w[t], m_.w[t], v_.w[t], h_.weight_decay, c1, c2);
    }

private:
    void update(Matrix& theta, const Matrix& g, Matrix& m, Matrix& v, double decay, double c1,
                double c2) const
    {
        if (g.rows() != theta.rows() || g.cols() != theta.cols())
            throw std::invalid_argument("gradient shape mismatch");
        if (decay != 0.0)
            theta *= 1.0 - h_.lr * decay;
        m = h_.beta1 * m + (1.0 - h_.beta1) * g;
        v = h_.beta2 * v + (1.0 - h_.beta2) * g.cwiseProduct(g);
        theta.array() -= h_.lr * (m.array() / c1) / ((v.array() / c2).sqrt() + h_.epsilon);
    }

    Hyper h_;
    std::size_t step_ = 0;
    ModelParams m_, v_;
};

struct GradCheckResult {
    double max_rel_error = 0.0;
    std::size_t checked = 0;
};

/// Compares analytic gradients with central differences of step h on every
/// parameter (dropout off). The relative error of an entry is
/// |a - fd| / max(|a|, |fd|, 1e-6 max(1, |L|)); the floor keeps roundoff in
/// the loss from dominating near-zero entries.
inline GradCheckResult gradient_check(const ModelParams& params, const NormalizedAdjacency& adj,
                                      const TrainConfig& cfg, const Objective& objective,
                                      double h = 1e-5)
{
    auto base = loss_and_grads(params, adj, cfg, objective);
    const double floor = 1e-6 * std::max(1.0, std::abs(base.loss));
    ModelParams probe = params;
    GradCheckResult r;
    auto value = [&]() {
        auto c = forward_cached(probe, adj, cfg, nullptr);
        return objective.evaluate(c.p, nullptr);
    };
    auto check = [&](Matrix& theta, const Matrix& analytic) {
        for (Eigen::Index i = 0; i < theta.rows(); ++i)
            for (Eigen::Index j = 0; j < theta.cols(); ++j) {
                const double keep = theta(i, j);
                theta(i, j) = keep + h;
                double up = value();
                theta(i, j) = keep - h;
                double down = value();
                theta(i, j) = keep;
                double fd = (up - down) / (2.0 * h);
                double a = analytic(i, j);
                double denom = std::max({std::abs(a), std::abs(fd), floor});
                r.max_rel_error = std::max(r.max_rel_error, std::abs(a - fd) / denom);
                ++r.checked;
            }
    };
    check(probe.x, base.grads.x);
    for (std::size_t t = 0; t < probe.w.size(); ++t)
        check(probe.w[t], base.grads.w[t]);
    return r;
}

} // namespace gcolor
