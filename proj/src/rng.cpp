#include "rio/rng.hpp"

#include <cmath>

namespace rio {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t state = master_seed;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ (stream_index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    return RandomStream(splitmix64(state));
}

double RandomStream::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::standard_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

int RandomStream::bit() { return static_cast<int>(engine_() >> 63); }

std::uint32_t RandomStream::below(std::uint32_t bound) {
    // Rejection keeps the distribution exactly uniform.
    const std::uint64_t span = 0x100000000ULL;
    const std::uint64_t limit = span - span % bound;
    for (;;) {
        const std::uint64_t draw = engine_() >> 32;
        if (draw < limit) return static_cast<std::uint32_t>(draw % bound);
    }
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::complex<double> RandomStream::unit_phase() {
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * uniform01();
    return std::polar(1.0, angle);
}

void RandomStream::haar_qubit(std::complex<double>& alpha, std::complex<double>& beta) {
    const double cos_polar = uniform(-1.0, 1.0);
    const double half = std::acos(cos_polar) / 2.0;
    const double azimuth = 2.0 * 3.141592653589793238462643383279502884 * uniform01();
    alpha = std::complex<double>{std::cos(half), 0.0};
    beta = std::polar(std::sin(half), azimuth);
}

}  // namespace rio
