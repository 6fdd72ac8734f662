#pragma once

#include <cmath>
#include <cstdint>

namespace hetmarket {

// splitmix64: tiny, fast, excellent equidistribution for the stream lengths
// used here, and trivially seedable -- every realization gets its own engine
// so results are independent of thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform on [0,1) with 53 random bits; bit-identical across platforms
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller (pair cached)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = u01();
        while (u1 <= 0.0) u1 = u01();
        const double u2 = u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // exact Binomial(m, prob) draw by skipping between successes with
    // geometric gaps; cost is O(m*prob), ideal for the small acceptance
    // probabilities used throughout.
    long binomial(long m, double prob) {
        if (m <= 0 || prob <= 0.0) return 0;
        if (prob >= 1.0) return m;
        const double lq = std::log1p(-prob);
        long count = 0;
        long j = 0;
        for (;;) {
            const double u = u01();
            j += static_cast<long>(std::floor(std::log1p(-u) / lq)) + 1;
            if (j > m) return count;
            ++count;
        }
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Decorrelates a master seed into per-realization seeds.  Uses the splitmix64
// finalizer so neighboring indices map to statistically independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace hetmarket
