#include "hardy/oracle.hpp"

#include <cmath>
#include <vector>

namespace hardy::oracle {

namespace {

constexpr std::size_t kStepCap = 1000000;
constexpr std::size_t kBlock = 4096;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++, seeded per trajectory through splitmix64
struct Xoshiro {
    std::uint64_t s[4];

    explicit Xoshiro(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s) w = splitmix64(sm);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t next() {
        std::uint64_t r = rotl(s[0] + s[3], 23) + s[0];
        std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return r;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace

std::pair<double, double> wos_trajectory(const catalog::Geometry& g, double x0, double y0,
                                         double eps, std::uint64_t stream_seed,
                                         bool* capped) {
    Xoshiro rng(stream_seed);
    double x = x0, y = y0, time = 0;
    if (capped) *capped = false;
    for (std::size_t step = 0; step < kStepCap; ++step) {
        double d = catalog::boundary_gap(g, x, y);
        if (d < eps) return {time, x * x + y * y};
        double ang = 2 * M_PI * rng.uniform();
        x += d * std::cos(ang);
        y += d * std::sin(ang);
        time += d * d / 2;
    }
    if (capped) *capped = true;
    return {time, x * x + y * y};
}

ExitMoments estimate_exit_moments(const catalog::Geometry& g, std::size_t samples,
                                  double eps, std::uint64_t seed) {
    ExitMoments m;
    m.samples = samples;
    m.eps = eps;
    if (samples == 0) return m;

    // per-block partial sums, combined in index order
    double sum_t = 0, sum_t2 = 0, sum_q = 0, sum_q2 = 0;
    std::size_t done = 0;
    while (done < samples) {
        std::size_t count = std::min(kBlock, samples - done);
        double bt = 0, bt2 = 0, bq = 0, bq2 = 0;
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t sm = seed + (done + i + 1) * 0x9e3779b97f4a7c15ULL;
            std::uint64_t stream = splitmix64(sm);
            bool was_capped = false;
            auto [t, q] = wos_trajectory(g, g.bx0, g.by0, eps, stream, &was_capped);
            if (was_capped) ++m.capped;
            bt += t;
            bt2 += t * t;
            bq += q;
            bq2 += q * q;
        }
        sum_t += bt;
        sum_t2 += bt2;
        sum_q += bq;
        sum_q2 += bq2;
        done += count;
    }

    double n = static_cast<double>(samples);
    double mean_t = sum_t / n;
    double mean_q = sum_q / n;
    m.two_mean_time = 2 * mean_t;
    m.mean_sq_exit = mean_q;
    if (samples > 1) {
        double vt = std::max(0.0, (sum_t2 - n * mean_t * mean_t) / (n - 1));
        double vq = std::max(0.0, (sum_q2 - n * mean_q * mean_q) / (n - 1));
        m.se_time = 2 * std::sqrt(vt / n);
        m.se_sq_exit = std::sqrt(vq / n);
    }
    return m;
}

} // namespace hardy::oracle
