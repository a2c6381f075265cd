#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "segmin/core.hpp"

namespace segmin {

// Deterministic random source: mt19937_64 plus fixed-width mappings, so
// streams are byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1) with 53-bit resolution
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi], rejection-sampled
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    // uniform real in [lo, hi)
    double uniform_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::mt19937_64 engine_;
};

struct GaussianParams {
    int m = 50;
    int n = 50;
    int num_peaks = 7;
    std::uint64_t amp_lo = 1;
    std::uint64_t amp_hi = 25;
    std::optional<double> sigma;  // default min(m, n) / 6; explicit values must be positive
    std::uint64_t seed = 0;
};

// Synthetic smooth intensity map: the floored sum of `num_peaks` isotropic
// Gaussian densities with uniformly random centers and amplitudes. Cell
// (i, j) is evaluated at the point (i, j); per peak the draw order is
// center row, center column, amplitude.
IntensityMatrix gen_gaussian(const GaussianParams& p);

// Worst-case family for the base-b pipelines: the single-row matrix
// sum_{l<k} b^l * (1 2 .. b-1 0 b-1 .. 2 1) + b^k * e_b. Its optimum is b
// while any per-layer approach needs 2(b-1)k + 1 segments.
IntensityMatrix gen_adversarial(int b, int k);

// A size-b segmentation witnessing OPT <= b for gen_adversarial(b, k).
Segmentation adversarial_witness(int b, int k);

// Harmonic lower-bound family: (b-1) x (2*cols - 1) matrix whose row i holds
// value i in every odd column. Any segmentation needs at least
// H_{b-1} * cols segments.
IntensityMatrix gen_harmonic(int b, int cols);

// i.i.d. uniform cells in [0, h].
IntensityMatrix gen_random(int m, int n, Value h, std::uint64_t seed);

}  // namespace segmin
