#include "pef/tree.hpp"

#include <cmath>

namespace pef {

std::vector<double> Tree::step_expect(int level, const std::vector<double>& next) const {
    if (static_cast<int>(next.size()) != width(level + 1))
        throw NumericError("tree: step_expect size mismatch");
    std::vector<double> out(static_cast<std::size_t>(width(level)), 0.0);
    for (int v = 0; v < width(level); ++v) {
        double acc = 0.0;
        const int bc = branch_count(level, v);
        for (int b = 0; b < bc; ++b) acc += branch_prob(level, v, b) * next[child(level, v, b)];
        out[v] = acc;
    }
    return out;
}

std::vector<double> Tree::step_expect_dw(int level, const std::vector<double>& next, int d,
                                         double dt) const {
    std::vector<double> out(static_cast<std::size_t>(width(level)), 0.0);
    std::vector<double> dw(static_cast<std::size_t>(dim()), 0.0);
    for (int v = 0; v < width(level); ++v) {
        double acc = 0.0;
        const int bc = branch_count(level, v);
        for (int b = 0; b < bc; ++b) {
            increment(level, v, b, dw.data());
            acc += branch_prob(level, v, b) * next[child(level, v, b)] * dw[d];
        }
        out[v] = acc / dt;
    }
    return out;
}

std::vector<double> Tree::level_probs(int level) const {
    std::vector<double> probs(static_cast<std::size_t>(width(0)), 0.0);
    probs[0] = 1.0;
    for (int i = 0; i < level; ++i) {
        std::vector<double> nxt(static_cast<std::size_t>(width(i + 1)), 0.0);
        for (int v = 0; v < width(i); ++v) {
            const int bc = branch_count(i, v);
            for (int b = 0; b < bc; ++b) nxt[child(i, v, b)] += probs[v] * branch_prob(i, v, b);
        }
        probs.swap(nxt);
    }
    return probs;
}

double Tree::expect_from_root(int level, const std::vector<double>& values) const {
    std::vector<double> cur = values;
    for (int i = level - 1; i >= 0; --i) cur = step_expect(i, cur);
    return cur[0];
}

namespace {

class TrivialTree final : public Tree {
  public:
    explicit TrivialTree(int steps) : steps_(steps) {}
    int levels() const override { return steps_ + 1; }
    int width(int) const override { return 1; }
    int dim() const override { return 1; }
    int branch_count(int, int) const override { return 1; }
    int child(int, int, int) const override { return 0; }
    double branch_prob(int, int, int) const override { return 1.0; }
    void increment(int, int, int, double* out) const override { out[0] = 0.0; }
    void state(int, int, double* out) const override { out[0] = 0.0; }

  private:
    int steps_;
};

class BinomialTree final : public Tree {
  public:
    BinomialTree(int steps, double dt, int dim)
        : steps_(steps), dim_(dim), sqrt_dt_(std::sqrt(dt)) {
        if (dim < 1 || dim > 2) throw ValidationError("binomial tree: dim must be 1 or 2");
        branches_ = 1 << dim;
        prob_ = 1.0 / branches_;
    }
    int levels() const override { return steps_ + 1; }
    int width(int level) const override {
        int w = level + 1;
        return dim_ == 1 ? w : w * w;
    }
    int dim() const override { return dim_; }
    int branch_count(int, int) const override { return branches_; }
    int child(int level, int node, int branch) const override {
        if (dim_ == 1) return node + (branch & 1);
        const int w = level + 1;
        int j1 = node / w, j2 = node % w;
        j1 += (branch >> 1) & 1;
        j2 += branch & 1;
        return j1 * (w + 1) + j2;
    }
    double branch_prob(int, int, int) const override { return prob_; }
    void increment(int, int, int branch, double* out) const override {
        if (dim_ == 1) {
            out[0] = (branch & 1) ? sqrt_dt_ : -sqrt_dt_;
        } else {
            out[0] = ((branch >> 1) & 1) ? sqrt_dt_ : -sqrt_dt_;
            out[1] = (branch & 1) ? sqrt_dt_ : -sqrt_dt_;
        }
    }
    void state(int level, int node, double* out) const override {
        if (dim_ == 1) {
            out[0] = (2.0 * node - level) * sqrt_dt_;
        } else {
            const int w = level + 1;
            int j1 = node / w, j2 = node % w;
            out[0] = (2.0 * j1 - level) * sqrt_dt_;
            out[1] = (2.0 * j2 - level) * sqrt_dt_;
        }
    }

  private:
    int steps_;
    int dim_;
    double sqrt_dt_;
    int branches_;
    double prob_;
};

class ExplicitTree final : public Tree {
  public:
    ExplicitTree(std::vector<ExplicitTreeLevel> lv, int dim) : lv_(std::move(lv)), dim_(dim) {
        widths_.resize(lv_.size() + 1);
        widths_[0] = lv_.empty() ? 1 : static_cast<int>(lv_[0].children.size());
        for (std::size_t i = 0; i < lv_.size(); ++i) {
            const auto& L = lv_[i];
            if (L.children.size() != L.probs.size() || L.children.size() != L.dw.size())
                throw ValidationError("explicit tree: ragged level tables");
            int max_child = -1;
            for (std::size_t v = 0; v < L.children.size(); ++v) {
                if (L.children[v].empty())
                    throw ValidationError("explicit tree: node without children");
                double total = 0.0;
                for (std::size_t b = 0; b < L.children[v].size(); ++b) {
                    total += L.probs[v][b];
                    max_child = std::max(max_child, L.children[v][b]);
                    if (static_cast<int>(L.dw[v][b].size()) != dim_)
                        throw ValidationError("explicit tree: increment dimension mismatch");
                }
                if (std::fabs(total - 1.0) > 1e-12)
                    throw ValidationError("explicit tree: branch probabilities must sum to 1");
            }
            widths_[i + 1] = max_child + 1;
        }
        // cumulative Brownian states, expectation over incoming paths not
        // needed: store the state reached by the first incoming branch.
        states_.resize(widths_.size());
        states_[0].assign(static_cast<std::size_t>(widths_[0] * dim_), 0.0);
        for (std::size_t i = 0; i < lv_.size(); ++i) {
            states_[i + 1].assign(static_cast<std::size_t>(widths_[i + 1] * dim_), 0.0);
            for (std::size_t v = 0; v < lv_[i].children.size(); ++v)
                for (std::size_t b = 0; b < lv_[i].children[v].size(); ++b) {
                    int c = lv_[i].children[v][b];
                    for (int d = 0; d < dim_; ++d)
                        states_[i + 1][c * dim_ + d] =
                            states_[i][v * dim_ + d] + lv_[i].dw[v][b][d];
                }
        }
    }
    int levels() const override { return static_cast<int>(lv_.size()) + 1; }
    int width(int level) const override { return widths_[level]; }
    int dim() const override { return dim_; }
    int branch_count(int level, int node) const override {
        return static_cast<int>(lv_[level].children[node].size());
    }
    int child(int level, int node, int branch) const override {
        return lv_[level].children[node][branch];
    }
    double branch_prob(int level, int node, int branch) const override {
        return lv_[level].probs[node][branch];
    }
    void increment(int level, int node, int branch, double* out) const override {
        const auto& v = lv_[level].dw[node][branch];
        for (int d = 0; d < dim_; ++d) out[d] = v[d];
    }
    void state(int level, int node, double* out) const override {
        for (int d = 0; d < dim_; ++d) out[d] = states_[level][node * dim_ + d];
    }

  private:
    std::vector<ExplicitTreeLevel> lv_;
    int dim_;
    std::vector<int> widths_;
    std::vector<std::vector<double>> states_;
};

}  // namespace

std::shared_ptr<const Tree> make_trivial_tree(int steps) {
    return std::make_shared<TrivialTree>(steps);
}

std::shared_ptr<const Tree> make_binomial_tree(int steps, double dt, int dim) {
    return std::make_shared<BinomialTree>(steps, dt, dim);
}

std::shared_ptr<const Tree> make_explicit_tree(std::vector<ExplicitTreeLevel> levels, int dim) {
    return std::make_shared<ExplicitTree>(std::move(levels), dim);
}

}  // namespace pef
