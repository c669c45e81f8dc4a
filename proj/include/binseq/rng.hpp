#pragma once

#include <array>
#include <cstdint>
#include <cmath>

namespace binseq::rng {

// Philox4x64-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011,
// "Parallel random numbers: as easy as 1, 2, 3"; constants as in Random123).
// The key is (seed, stream): every (seed, stream) pair yields an independent
// stream, which is what makes replicate-indexed Monte Carlo deterministic
// under any thread scheduling.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key_{seed, stream}, block_(0), pos_(4) {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buf_ = block({block_, 0, 0, 0}, key_);
            ++block_;
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Binomial(m, p) as a sum of Bernoulli draws; m is small in this domain.
    int binomial(int m, double p) {
        int y = 0;
        for (int i = 0; i < m; ++i) y += bernoulli(p) ? 1 : 0;
        return y;
    }

    // Standard normal via inverse CDF (Wichura AS241, PPND16).
    double normal() {
        double u = uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        return norm_quantile(u);
    }

    // Inverse standard normal CDF, |error| < 1e-15 over (0,1).
    static double norm_quantile(double p);

    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key) {
        for (int r = 0; r < 10; ++r) {
            ctr = round(ctr, key);
            key[0] += 0x9E3779B97F4A7C15ull;
            key[1] += 0xBB67AE8584CAA73Bull;
        }
        return ctr;
    }

private:
    static void mulhilo(std::uint64_t a, std::uint64_t b,
                        std::uint64_t& hi, std::uint64_t& lo) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(p >> 64);
        lo = static_cast<std::uint64_t>(p);
    }

    static std::array<std::uint64_t, 4> round(const std::array<std::uint64_t, 4>& c,
                                              const std::array<std::uint64_t, 2>& k) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(0xD2E7470EE14C6C93ull, c[0], hi0, lo0);
        mulhilo(0xCA5A826395121157ull, c[2], hi1, lo1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }

    std::array<std::uint64_t, 2> key_;
    std::uint64_t block_;
    std::array<std::uint64_t, 4> buf_{};
    int pos_;
};

inline double Philox::norm_quantile(double p) {
    const double q = p - 0.5;
    double r, num, den;
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        num = (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                    6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                  1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                1.3314166789178437745e+2) * r + 3.3871328727963666080e0);
        den = (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                    3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                  5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                4.2313330701600911252e+1) * r + 1.0);
        return q * num / den;
    }
    r = q < 0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    if (r <= 5.0) {
        r -= 1.6;
        num = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r + 1.42343711074968357734e0);
        den = (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        num = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r + 6.65790464350110377720e0);
        den = (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    const double x = num / den;
    return q < 0 ? -x : x;
}

}  // namespace binseq::rng
