#pragma once

#include <algorithm>
#include <vector>

#include "gcolor/graph.hpp"

namespace gcolor {

namespace detail {

/// Left-right planarity test (Brandes' formulation of de Fraysseix and
/// Rosenstiehl). Boolean answer only; no embedding is built. Both DFS passes
/// are iterative so deep paths cannot overflow the call stack.
class LrPlanarity {
public:
    explicit LrPlanarity(const Graph& g)
        : n_(g.order()), adj_(n_), height_(n_, kNone), parent_edge_(n_, kNone), out_(n_)
    {
        auto edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adj_[edges[e].first].push_back({edges[e].second, int(e)});
            adj_[edges[e].second].push_back({edges[e].first, int(e)});
        }
        std::size_t m = edges.size();
        src_.assign(m, kNone);
        dst_.assign(m, kNone);
        lowpt_.assign(m, 0);
        lowpt2_.assign(m, 0);
        nesting_.assign(m, 0);
        ref_.assign(m, kNone);
        lowpt_edge_.assign(m, kNone);
        stack_bottom_.assign(m, kNone);
    }

    bool run()
    {
        if (n_ > 2 && edge_count() > 3 * n_ - 6)
            return false;
        std::vector<int> roots;
        for (std::size_t v = 0; v < n_; ++v) {
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots.push_back(int(v));
                orient(int(v));
            }
        }
        for (std::size_t v = 0; v < n_; ++v)
            std::stable_sort(out_[v].begin(), out_[v].end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (int r : roots)
            if (!test(r))
                return false;
        return true;
    }

private:
    static constexpr int kNone = -1;

    struct Interval {
        int low = kNone;
        int high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };

    struct ConflictPair {
        Interval left;
        Interval right;
        int id = kNone;
    };

    std::size_t edge_count() const { return src_.size(); }

    int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

    bool conflicting(const Interval& i, int b) const
    {
        return !i.empty() && i.high != kNone && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const
    {
        if (p.left.empty())
            return lowpt_[p.right.low];
        if (p.right.empty())
            return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    void orient(int root)
    {
        std::vector<int> stack{root};
        if (ind_.empty()) {
            ind_.assign(n_, 0);
            tree_pending_.assign(edge_count(), false);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int e = parent_edge_[v];
            while (ind_[v] < adj_[v].size()) {
                auto [w, vw] = adj_[v][ind_[v]];
                if (!(tree_pending_[vw] && src_[vw] == v)) {
                    if (src_[vw] != kNone) {
                        ++ind_[v];
                        continue;
                    }
                    src_[vw] = v;
                    dst_[vw] = int(w);
                    out_[v].push_back(vw);
                    lowpt_[vw] = height_[v];
                    lowpt2_[vw] = height_[v];
                    if (height_[w] == kNone) {
                        parent_edge_[w] = vw;
                        height_[w] = height_[v] + 1;
                        stack.push_back(v);
                        stack.push_back(int(w));
                        tree_pending_[vw] = true;
                        break;
                    }
                    lowpt_[vw] = height_[w];
                }
                nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
                if (e != kNone) {
                    if (lowpt_[vw] < lowpt_[e]) {
                        lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                        lowpt_[e] = lowpt_[vw];
                    } else if (lowpt_[vw] > lowpt_[e]) {
                        lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                    } else {
                        lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                    }
                }
                ++ind_[v];
            }
        }
    }

    bool test(int root)
    {
        if (test_ind_.empty()) {
            test_ind_.assign(n_, 0);
            test_pending_.assign(edge_count(), false);
        }
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int e = parent_edge_[v];
            bool descended = false;
            const auto& ordered = out_[v];
            while (test_ind_[v] < ordered.size()) {
                int ei = ordered[test_ind_[v]];
                int w = dst_[ei];
                if (!test_pending_[ei]) {
                    stack_bottom_[ei] = top_id();
                    if (ei == parent_edge_[w]) {
                        stack.push_back(v);
                        stack.push_back(w);
                        test_pending_[ei] = true;
                        descended = true;
                        break;
                    }
                    lowpt_edge_[ei] = ei;
                    stack_.push_back({Interval{}, Interval{ei, ei}, next_id_++});
                }
                if (lowpt_[ei] < height_[v]) {
                    if (ei == ordered.front())
                        lowpt_edge_[e] = lowpt_edge_[ei];
                    else if (!add_constraints(ei, e))
                        return false;
                }
                ++test_ind_[v];
            }
            if (!descended && e != kNone)
                remove_back_edges(e);
        }
        return true;
    }

    bool add_constraints(int ei, int e)
    {
        ConflictPair p;
        // merge return edges of ei into p.right
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty())
                std::swap(q.left, q.right);
            if (!q.left.empty())
                return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right = q.right;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (top_id() != stack_bottom_[ei]);

        // merge conflicting return edges of earlier siblings into p.left
        while (!stack_.empty()
               && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei))
                std::swap(q.left, q.right);
            if (conflicting(q.right, ei))
                return false;
            if (p.right.low != kNone)
                ref_[p.right.low] = q.right.high;
            if (q.right.low != kNone)
                p.right.low = q.right.low;
            if (p.left.empty())
                p.left = q.left;
            else if (p.left.low != kNone)
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) {
            p.id = next_id_++;
            stack_.push_back(p);
        }
        return true;
    }

    void remove_back_edges(int e)
    {
        int u = src_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u])
            stack_.pop_back();
        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high != kNone && dst_[p.left.high] == u)
                p.left.high = ref_[p.left.high];
            if (p.left.high == kNone && p.left.low != kNone) {
                ref_[p.left.low] = p.right.low;
                p.left.low = kNone;
            }
            while (p.right.high != kNone && dst_[p.right.high] == u)
                p.right.high = ref_[p.right.high];
            if (p.right.high == kNone && p.right.low != kNone) {
                ref_[p.right.low] = p.left.low;
                p.right.low = kNone;
            }
            stack_.push_back(p);
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            int hl = stack_.back().left.high;
            int hr = stack_.back().right.high;
            ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
        }
    }

    std::size_t n_;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> out_;

    std::vector<int> src_, dst_;
    std::vector<int> lowpt_, lowpt2_, nesting_;
    std::vector<int> ref_, lowpt_edge_, stack_bottom_;

    std::vector<std::size_t> ind_, test_ind_;
    std::vector<bool> tree_pending_, test_pending_;

    std::vector<ConflictPair> stack_;
    int next_id_ = 0;
};

} // namespace detail

/// True iff g has a planar embedding. Linear time apart from sorting each
/// vertex's outgoing edges by nesting depth.
inline bool is_planar(const Graph& g)
{
    return detail::LrPlanarity(g).run();
}

} // namespace gcolor
