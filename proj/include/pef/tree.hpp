#ifndef PEF_TREE_HPP
#define PEF_TREE_HPP

#include <memory>
#include <vector>

#include "pef/common.hpp"
#include "pef/time_grid.hpp"

namespace pef {

// Finite Markov model of the reference noise on the time grid. Level i holds
// the states reachable at t_i; each state branches to level i+1 with
// probabilities summing to 1 and a Brownian increment attached per branch.
// Conditional expectations are exact finite sums on this model.
class Tree {
  public:
    virtual ~Tree() = default;

    virtual int levels() const = 0;              // N + 1
    virtual int width(int level) const = 0;      // states at a level
    virtual int dim() const = 0;                 // Brownian dimension
    virtual int branch_count(int level, int node) const = 0;
    virtual int child(int level, int node, int branch) const = 0;
    virtual double branch_prob(int level, int node, int branch) const = 0;
    // Brownian increment on a branch, `dim()` entries.
    virtual void increment(int level, int node, int branch, double* out) const = 0;
    // Cumulative Brownian state at a node, `dim()` entries.
    virtual void state(int level, int node, double* out) const = 0;

    // E[ next | state at `level` ]; next has width(level+1) entries.
    std::vector<double> step_expect(int level, const std::vector<double>& next) const;
    // E[ next * dW_d | state ] / dt
    std::vector<double> step_expect_dw(int level, const std::vector<double>& next, int d,
                                       double dt) const;
    // Unconditional state probabilities at a level.
    std::vector<double> level_probs(int level) const;
    // E[ values at `level` ] from time 0.
    double expect_from_root(int level, const std::vector<double>& values) const;
};

std::shared_ptr<const Tree> make_trivial_tree(int steps);
// Recombining +-sqrt(dt) walk per coordinate; 2^dim branches per state.
std::shared_ptr<const Tree> make_binomial_tree(int steps, double dt, int dim);

// Hand-built tree: per level, per node, explicit children/probabilities and
// increments. Used by tests and by model files with custom noise.
struct ExplicitTreeLevel {
    // children[node][branch], probs[node][branch], dw[node][branch][dim]
    std::vector<std::vector<int>> children;
    std::vector<std::vector<double>> probs;
    std::vector<std::vector<std::vector<double>>> dw;
};

std::shared_ptr<const Tree> make_explicit_tree(std::vector<ExplicitTreeLevel> levels, int dim);

}  // namespace pef

#endif
