#include "segmin/generators.hpp"

#include <cmath>
#include <limits>

namespace segmin {

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();  // full 64-bit range
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + x % span;
}

IntensityMatrix gen_gaussian(const GaussianParams& p) {
    if (p.m < 1 || p.n < 1) throw std::invalid_argument("gen_gaussian: dims must be positive");
    if (p.num_peaks < 1) throw std::invalid_argument("gen_gaussian: need at least one peak");
    if (p.amp_lo > p.amp_hi) throw std::invalid_argument("gen_gaussian: empty amplitude range");
    double sigma = p.sigma.value_or(std::min(p.m, p.n) / 6.0);
    if (!(sigma > 0)) throw std::invalid_argument("gen_gaussian: sigma must be positive");

    Rng rng(p.seed);
    struct Peak {
        double cx, cy, amp;
    };
    std::vector<Peak> peaks;
    peaks.reserve(p.num_peaks);
    for (int k = 0; k < p.num_peaks; ++k) {
        Peak peak;
        peak.cx = rng.uniform_real(1.0, static_cast<double>(p.m));
        peak.cy = rng.uniform_real(1.0, static_cast<double>(p.n));
        peak.amp = static_cast<double>(rng.uniform_int(p.amp_lo, p.amp_hi));
        peaks.push_back(peak);
    }

    const double norm = 1.0 / (2.0 * M_PI * sigma * sigma);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    std::vector<std::vector<Value>> rows(p.m, std::vector<Value>(p.n, 0));
    for (int i = 1; i <= p.m; ++i) {
        for (int j = 1; j <= p.n; ++j) {
            double density = 0;
            for (const Peak& peak : peaks) {
                double dx = i - peak.cx;
                double dy = j - peak.cy;
                density += peak.amp * norm * std::exp(-(dx * dx + dy * dy) * inv2s2);
            }
            rows[i - 1][j - 1] = static_cast<Value>(std::floor(density));
        }
    }
    return IntensityMatrix::from_rows(rows);
}

IntensityMatrix gen_adversarial(int b, int k) {
    if (b < 2 || k < 1) throw std::invalid_argument("gen_adversarial: need b >= 2, k >= 1");
    const int n = 2 * b - 1;
    // sum of the first k layer scales: 1 + b + ... + b^(k-1)
    Value layer_sum = 0;
    Value scale = 1;
    for (int l = 0; l < k; ++l) {
        layer_sum += scale;
        scale *= b;
    }
    std::vector<Value> row(n, 0);
    for (int j = 1; j <= n; ++j) {
        Value ramp = static_cast<Value>(j < b ? j : (j > b ? 2 * b - j : 0));
        row[j - 1] = ramp * layer_sum;
    }
    row[b - 1] += scale;  // b^k at the centre column
    return IntensityMatrix::from_rows({row});
}

Segmentation adversarial_witness(int b, int k) {
    if (b < 2 || k < 1) throw std::invalid_argument("adversarial_witness: need b >= 2, k >= 1");
    Value layer_sum = 0;
    Value scale = 1;
    for (int l = 0; l < k; ++l) {
        layer_sum += scale;
        scale *= b;
    }
    Segmentation s;
    s.m = 1;
    s.n = 2 * b - 1;
    for (int i = 1; i <= b - 1; ++i) {
        SegmentMatrix sm;
        sm.value = layer_sum;
        sm.rows[1] = {i, 2 * b - i};
        s.segments.push_back(std::move(sm));
    }
    SegmentMatrix centre;
    centre.value = 1;
    centre.rows[1] = {b, b};
    s.segments.push_back(std::move(centre));
    return s;
}

IntensityMatrix gen_harmonic(int b, int cols) {
    if (b < 2 || cols < 1) throw std::invalid_argument("gen_harmonic: need b >= 2, cols >= 1");
    const int m = b - 1;
    const int n = 2 * cols - 1;
    std::vector<std::vector<Value>> rows(m, std::vector<Value>(n, 0));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; j += 2) {
            rows[i - 1][j - 1] = static_cast<Value>(i);
        }
    }
    return IntensityMatrix::from_rows(rows);
}

IntensityMatrix gen_random(int m, int n, Value h, std::uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("gen_random: dims must be positive");
    Rng rng(seed);
    std::vector<std::vector<Value>> rows(m, std::vector<Value>(n, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            rows[i][j] = rng.uniform_int(0, h);
        }
    }
    return IntensityMatrix::from_rows(rows);
}

}  // namespace segmin
