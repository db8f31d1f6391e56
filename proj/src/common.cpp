#include "pef/common.hpp"

#include <cmath>

namespace pef {

namespace {
int g_threads = 1;
}

int thread_count() { return g_threads; }

void set_threads(int n) {
    if (n < 1) n = 1;
    g_threads = n;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    state = splitmix64(seed ^ splitmix64(stream + 0x6a09e667f3bcc909ULL));
}

std::uint64_t Rng::next_u64() {
    state = splitmix64(state);
    return state;
}

double Rng::next_uniform() {
    // 53-bit mantissa, in [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u clamped away from 0 so log() stays finite.
    double u = next_uniform();
    if (u < 1e-300) u = 1e-300;
    double v = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

}  // namespace pef
