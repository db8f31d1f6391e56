#include "pef/control_set.hpp"

#include <algorithm>
#include <cmath>

namespace pef {

ControlSet ControlSet::finite_list(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<std::vector<double>> pts;
    pts.reserve(values.size());
    for (double v : values) pts.push_back({v});
    return finite_points(std::move(pts));
}

ControlSet ControlSet::finite_points(std::vector<std::vector<double>> pts) {
    ControlSet s;
    s.kind_ = Kind::FiniteList;
    s.points_ = std::move(pts);
    s.dim_ = s.points_.empty() ? 1 : static_cast<int>(s.points_[0].size());
    return s;
}

ControlSet ControlSet::interval(double lo, double hi) {
    ControlSet s;
    s.kind_ = Kind::Interval;
    s.dim_ = 1;
    s.lo_ = {lo};
    s.hi_ = {hi};
    return s;
}

ControlSet ControlSet::box(double lo1, double hi1, double lo2, double hi2) {
    ControlSet s;
    s.kind_ = Kind::Box;
    s.dim_ = 2;
    s.lo_ = {lo1, lo2};
    s.hi_ = {hi1, hi2};
    return s;
}

ControlSet ControlSet::unconstrained(int dim) {
    ControlSet s;
    s.kind_ = Kind::Unconstrained;
    s.dim_ = dim;
    return s;
}

int ControlSet::point_count() const {
    return static_cast<int>(points_.size());
}

const std::vector<double>& ControlSet::point(int i) const { return points_[i]; }

bool ControlSet::contains(const std::vector<double>& a, double tol) const {
    if (static_cast<int>(a.size()) != dim_) return false;
    switch (kind_) {
        case Kind::Unconstrained:
            return true;
        case Kind::FiniteList:
            for (const auto& p : points_) {
                double d2 = 0.0;
                for (int k = 0; k < dim_; ++k) d2 += (p[k] - a[k]) * (p[k] - a[k]);
                if (std::sqrt(d2) <= tol) return true;
            }
            return false;
        case Kind::Interval:
        case Kind::Box:
            for (int k = 0; k < dim_; ++k)
                if (a[k] < lo_[k] - tol || a[k] > hi_[k] + tol) return false;
            return true;
    }
    return false;
}

std::vector<double> ControlSet::project(const std::vector<double>& a) const {
    std::vector<double> out = a;
    switch (kind_) {
        case Kind::Unconstrained:
            return out;
        case Kind::Interval:
        case Kind::Box:
            for (int k = 0; k < dim_; ++k) out[k] = std::min(std::max(a[k], lo_[k]), hi_[k]);
            return out;
        case Kind::FiniteList: {
            double best = 0.0;
            int best_i = -1;
            for (int i = 0; i < point_count(); ++i) {
                double d2 = 0.0;
                for (int k = 0; k < dim_; ++k) d2 += (points_[i][k] - a[k]) * (points_[i][k] - a[k]);
                if (best_i < 0 || d2 < best) {
                    best = d2;
                    best_i = i;
                }
            }
            if (best_i < 0) throw ValidationError("control set: empty finite list");
            return points_[best_i];
        }
    }
    return out;
}

std::vector<std::string> ControlSet::check() const {
    std::vector<std::string> issues;
    switch (kind_) {
        case Kind::FiniteList:
            if (points_.empty()) issues.push_back("control set: finite list is empty");
            for (const auto& p : points_)
                if (static_cast<int>(p.size()) != dim_)
                    issues.push_back("control set: inconsistent point dimension");
            break;
        case Kind::Interval:
        case Kind::Box:
            for (int k = 0; k < dim_; ++k) {
                if (!(lo_[k] <= hi_[k])) issues.push_back("control set bounds reversed");
                if (!std::isfinite(lo_[k]) || !std::isfinite(hi_[k]))
                    issues.push_back("control set: non-finite bound");
            }
            break;
        case Kind::Unconstrained:
            break;
    }
    return issues;
}

}  // namespace pef
