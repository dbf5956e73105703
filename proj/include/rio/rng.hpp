#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace rio {

std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic random stream. The core engine (mt19937_64) and all variate
/// transforms are fully specified here, so a given seed produces identical
/// sequences on every platform and standard library.
///
/// Parallel consumers derive independent streams from a master seed and a
/// stream index; results merged by index are then reproducible regardless of
/// scheduling.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    static RandomStream derive(std::uint64_t master_seed, std::uint64_t stream_index);

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01();

    /// Standard normal (Box-Muller; pairs cached).
    double standard_normal();

    int bit();

    /// Uniform integer in [0, bound); bound >= 1.
    std::uint32_t below(std::uint32_t bound);

    double uniform(double lo, double hi);

    /// e^{i 2 pi u}.
    std::complex<double> unit_phase();

    /// Haar-uniform qubit amplitudes: alpha real >= 0, |alpha|^2 + |beta|^2 = 1.
    void haar_qubit(std::complex<double>& alpha, std::complex<double>& beta);

  private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace rio
