#include "pef/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pef {

OrderedScenario orderize(const std::vector<double>& times,
                         const std::vector<std::vector<double>>& marks) {
    if (times.size() != marks.size())
        throw ValidationError("orderize: times and marks must have the same length");
    for (double t : times) {
        if (std::isnan(t) || t < 0.0) throw ValidationError("orderize: times must be >= 0");
    }
    const int n = static_cast<int>(times.size());
    std::vector<int> order(times.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return times[a] < times[b]; });

    OrderedScenario s;
    s.k = n;
    s.times.reserve(times.size());
    s.marks.reserve(times.size());
    s.index_marks.reserve(times.size());
    for (int idx : order) {
        s.times.push_back(times[idx]);
        s.marks.push_back(marks[idx]);
        s.index_marks.push_back(idx + 1);
    }
    return s;
}

OrderedScenario orderize(const std::vector<double>& times, const std::vector<double>& marks) {
    std::vector<std::vector<double>> m;
    m.reserve(marks.size());
    for (double e : marks) m.push_back({e});
    return orderize(times, m);
}

}  // namespace pef
