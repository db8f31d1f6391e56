#include "pef/time_grid.hpp"

#include <cmath>

namespace pef {

TimeGrid::TimeGrid(double horizon, int step_count) : horizon_(horizon), steps_(step_count) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw ValidationError("time grid: horizon must be positive and finite");
    if (step_count < 1) throw ValidationError("time grid: step count must be >= 1");
    dt_ = horizon / step_count;
    nodes_.resize(step_count + 1);
    for (int i = 0; i <= step_count; ++i) nodes_[i] = (horizon * i) / step_count;
    nodes_[step_count] = horizon;  // t_N = T exactly
}

int TimeGrid::index_of(double t) const {
    double pos = t / dt_;
    int i = static_cast<int>(std::lround(pos));
    if (i < 0 || i > steps_ || std::fabs(nodes_[i] - t) > 1e-9 * (1.0 + horizon_))
        throw ValidationError("time " + std::to_string(t) + " is not a grid node");
    return i;
}

bool TimeGrid::contains(double t) const {
    if (t < -1e-12 || t > horizon_ + 1e-9) return false;
    double pos = t / dt_;
    int i = static_cast<int>(std::lround(pos));
    return i >= 0 && i <= steps_ && std::fabs(nodes_[i] - t) <= 1e-9 * (1.0 + horizon_);
}

MarkSpace::MarkSpace(std::vector<std::vector<double>> points, std::vector<double> weights,
                     bool pmf)
    : points_(std::move(points)), weights_(std::move(weights)), pmf_(pmf) {
    if (points_.empty() || points_.size() != weights_.size())
        throw ValidationError("mark space: need matching nonempty points and weights");
    dim_ = static_cast<int>(points_[0].size());
    if (dim_ < 1) throw ValidationError("mark space: points must have dimension >= 1");
    for (const auto& p : points_)
        if (static_cast<int>(p.size()) != dim_)
            throw ValidationError("mark space: inconsistent point dimensions");
    double total = 0.0;
    for (double w : weights_) {
        if (w < 0.0 || !std::isfinite(w)) throw ValidationError("mark space: weights must be >= 0");
        total += w;
    }
    if (pmf_ && std::fabs(total - 1.0) > 1e-12)
        throw ValidationError("mark space: pmf weights must sum to 1");
}

MarkSpace MarkSpace::single_point(double value) {
    return MarkSpace({{value}}, {1.0}, true);
}

MarkSpace MarkSpace::scalar_pmf(std::vector<double> points, std::vector<double> weights) {
    std::vector<std::vector<double>> pts;
    pts.reserve(points.size());
    for (double p : points) pts.push_back({p});
    return MarkSpace(std::move(pts), std::move(weights), true);
}

double MarkSpace::total_weight() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

std::vector<double> theta_weights(ThetaRule rule, const TimeGrid& grid, int lo, int hi,
                                  bool strict_lo, bool strict_hi) {
    if (lo < 0) lo = 0;
    if (hi > grid.steps()) hi = grid.steps();
    std::vector<double> w;
    if (hi < lo) return w;
    w.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    const double h = grid.dt();
    switch (rule) {
        case ThetaRule::Atoms:
            for (int j = lo; j <= hi; ++j) w[j - lo] = 1.0;
            if (strict_lo) w.front() = 0.0;
            if (strict_hi) w.back() = 0.0;
            break;
        case ThetaRule::Trapezoid:
            if (hi == lo) break;  // zero-width interval
            for (int j = lo; j <= hi; ++j) w[j - lo] = h;
            w.front() = 0.5 * h;
            w.back() = 0.5 * h;
            break;
        case ThetaRule::LeftRect:
            for (int j = lo; j < hi; ++j) w[j - lo] = h;
            break;
    }
    return w;
}

}  // namespace pef
