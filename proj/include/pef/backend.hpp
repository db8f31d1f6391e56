#ifndef PEF_BACKEND_HPP
#define PEF_BACKEND_HPP

#include <memory>
#include <vector>

#include "pef/time_grid.hpp"
#include "pef/tree.hpp"

namespace pef {

// Realization of conditional expectations with respect to the reference
// filtration. Two variants:
//   FiniteTree          exact finite sums on a probability tree
//   MonteCarloRegression least-squares projection on polynomial bases of the
//                        simulated Brownian state (per-path values)
class Backend {
  public:
    enum class Kind { FiniteTree, MonteCarloRegression };

    static Backend finite_tree(std::shared_ptr<const Tree> tree);
    static Backend monte_carlo(const TimeGrid& grid, int dim, int paths, int basis_degree,
                               std::uint64_t seed);

    Kind kind() const { return kind_; }
    bool is_tree() const { return kind_ == Kind::FiniteTree; }
    const Tree& tree() const;

    int levels() const;
    int steps() const { return levels() - 1; }
    int dim() const { return dim_; }
    // Carrier size of an adapted value at a level: tree nodes, or path count.
    int width(int level) const;

    int paths() const { return paths_; }
    int basis_degree() const { return basis_degree_; }
    std::uint64_t seed() const { return seed_; }
    // Brownian increment of a path over [t_level, t_level+1], component d.
    double path_increment(int level, int path, int d) const;
    double path_state(int level, int path, int d) const;

    // E[ next | F_level ]. `next` carries width(level+1) values.
    std::vector<double> step_expect(int level, const std::vector<double>& next) const;
    // E[ next * dW_d | F_level ] / dt
    std::vector<double> step_expect_dw(int level, const std::vector<double>& next, int d,
                                       double dt) const;
    // E at time zero of values carried at `level`.
    double expect_at_root(int level, const std::vector<double>& values) const;

  private:
    Kind kind_ = Kind::FiniteTree;
    std::shared_ptr<const Tree> tree_;
    int dim_ = 1;
    int paths_ = 0;
    int basis_degree_ = 2;
    std::uint64_t seed_ = 0;
    int mc_levels_ = 0;
    double dt_ = 0.0;
    // increments[level][path*dim + d]
    std::vector<std::vector<double>> increments_;
    std::vector<std::vector<double>> states_;

    std::vector<double> regress(int level, const std::vector<double>& target) const;
    std::vector<std::vector<double>> basis_matrix(int level) const;
};

}  // namespace pef

#endif
