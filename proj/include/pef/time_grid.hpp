#ifndef PEF_TIME_GRID_HPP
#define PEF_TIME_GRID_HPP

#include <vector>

#include "pef/common.hpp"

namespace pef {

// Uniform grid t_0 = 0 < ... < t_N = T. Default times live on grid nodes;
// an extra sentinel index (theta_inf) carries the mass of "no event by T".
class TimeGrid {
  public:
    TimeGrid(double horizon, int step_count);

    double horizon() const { return horizon_; }
    int steps() const { return steps_; }          // N
    int node_count() const { return steps_ + 1; } // N + 1
    double dt() const { return dt_; }
    double node(int i) const { return nodes_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }

    // Index of an on-grid time; throws if t is off-grid beyond tolerance.
    int index_of(double t) const;
    bool contains(double t) const;

  private:
    double horizon_;
    int steps_;
    double dt_;
    std::vector<double> nodes_;
};

// Sentinel for the "after the horizon" bucket of an event-time coordinate.
inline constexpr int theta_inf = -1;

// Quadrature points e_1..e_M with weights for the mark measure. `pmf` records
// whether the weights are probabilities (sum 1) or plain quadrature weights.
class MarkSpace {
  public:
    MarkSpace(std::vector<std::vector<double>> points, std::vector<double> weights, bool pmf);

    static MarkSpace single_point(double value = 0.0);
    static MarkSpace scalar_pmf(std::vector<double> points, std::vector<double> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    int dim() const { return dim_; }
    const std::vector<double>& point(int j) const { return points_[j]; }
    double scalar_point(int j) const { return points_[j][0]; }
    double weight(int j) const { return weights_[j]; }
    bool is_pmf() const { return pmf_; }
    double total_weight() const;

  private:
    std::vector<std::vector<double>> points_;
    std::vector<double> weights_;
    bool pmf_;
    int dim_;
};

// How a family's stored values integrate over an event-time coordinate.
//   Atoms:     values are probability masses at nodes; sums are exact.
//   Trapezoid: values are densities; composite trapezoid over the node range.
//   LeftRect:  values are densities; left-endpoint rule.
// The infinity bucket is always an atom of mass and only enters tail ranges.
enum class ThetaRule { Atoms, Trapezoid, LeftRect };

// Weights w_j so that integral over theta in [t_lo, t_hi] of g equals
// sum_j w_j g(t_j), j = lo..hi. For Atoms the boundary flags select strict or
// inclusive endpoints; density rules ignore them (endpoints carry no mass).
std::vector<double> theta_weights(ThetaRule rule, const TimeGrid& grid, int lo, int hi,
                                  bool strict_lo = false, bool strict_hi = false);

}  // namespace pef

#endif
