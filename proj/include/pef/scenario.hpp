#ifndef PEF_SCENARIO_HPP
#define PEF_SCENARIO_HPP

#include <vector>

#include "pef/common.hpp"

namespace pef {

// Realized default history: k events with nondecreasing times, their marks,
// and (after ranking raw times) the index marks recording which original
// coordinate produced each order statistic.
struct OrderedScenario {
    int k = 0;
    std::vector<double> times;               // theta_1 <= ... <= theta_k
    std::vector<std::vector<double>> marks;  // e_1..e_k, each in R^m
    std::vector<int> index_marks;            // iota_1..iota_k, 1-based

    bool empty() const { return k == 0; }
};

// Ranks raw event times, carrying marks along and recording index marks.
// Ties keep the original coordinate order (stable). Negative times throw.
OrderedScenario orderize(const std::vector<double>& times,
                         const std::vector<std::vector<double>>& marks);

OrderedScenario orderize(const std::vector<double>& times, const std::vector<double>& marks);

}  // namespace pef

#endif
