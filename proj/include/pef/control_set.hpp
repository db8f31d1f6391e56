#ifndef PEF_CONTROL_SET_HPP
#define PEF_CONTROL_SET_HPP

#include <vector>

#include "pef/common.hpp"

namespace pef {

// Admissible control values for one regime. Controls are points in R^q with
// q = dim(). Supported shapes: finite list, closed interval (q = 1), closed
// box (q = 2), and unconstrained (q = 1 or 2, all of R^q).
class ControlSet {
  public:
    enum class Kind { FiniteList, Interval, Box, Unconstrained };

    static ControlSet finite_list(std::vector<double> values);           // q = 1
    static ControlSet finite_points(std::vector<std::vector<double>> pts);  // q >= 1
    static ControlSet interval(double lo, double hi);
    static ControlSet box(double lo1, double hi1, double lo2, double hi2);
    static ControlSet unconstrained(int dim = 1);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    // Finite lists keep their construction order (ascending for the scalar
    // builder); argmax ties are broken by the first element in this order.
    int point_count() const;
    const std::vector<double>& point(int i) const;

    double lo(int d = 0) const { return lo_[d]; }
    double hi(int d = 0) const { return hi_[d]; }

    bool contains(const std::vector<double>& a, double tol = 1e-12) const;
    std::vector<double> project(const std::vector<double>& a) const;  // Euclidean projection

    // Well-formedness problems as human-readable strings (empty = fine).
    std::vector<std::string> check() const;

  private:
    Kind kind_ = Kind::Unconstrained;
    int dim_ = 1;
    std::vector<std::vector<double>> points_;
    std::vector<double> lo_, hi_;
};

}  // namespace pef

#endif
