#ifndef PEF_COMMON_HPP
#define PEF_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pef {

// Thrown when an input model or configuration is rejected before any
// computation starts. The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on numerical failure (non-convergence, budget exceeded, non-finite
// value). The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on file-system problems. The CLI maps this to exit code 4.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Threading. Kernels are written as slot-writing loops (each iteration owns
// its output slot), so results are bitwise identical for any thread count.
// `set_threads(1)` gives the plain serial loop, kept as the reference path.
// ---------------------------------------------------------------------------

int thread_count();
void set_threads(int n);

template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
    if (thread_count() > 1 && n > 1) {
        const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (std::int64_t i = 0; i < sn; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

// ---------------------------------------------------------------------------
// Counter-based RNG streams. splitmix64 hashes (seed, stream id) so each
// path/worker draws from its own stream regardless of scheduling order.
// ---------------------------------------------------------------------------

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // uniform in [0, 1)
    double next_uniform();
    // standard normal via Box-Muller (explicit, platform-stable)
    double next_normal();

  private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

inline bool nearly_equal(double a, double b, double tol) {
    double d = a - b;
    return (d < 0 ? -d : d) <= tol;
}

}  // namespace pef

#endif
