#include "binseq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "binseq/errors.hpp"

namespace binseq::stats {

double chisq_sf(double u, int df) {
    if (u <= 0.0) return 1.0;
    boost::math::chi_squared_distribution<double> d(df);
    return boost::math::cdf(boost::math::complement(d, u));
}

double chisq_upper_quantile(double p, int df) {
    boost::math::chi_squared_distribution<double> d(df);
    return boost::math::quantile(boost::math::complement(d, p));
}

double chisq_cdf(double u, int df) {
    if (u <= 0.0) return 0.0;
    boost::math::chi_squared_distribution<double> d(df);
    return boost::math::cdf(d, u);
}

KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw ValidationError("ks_test: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    // Stephens' modification, then the Kolmogorov series.
    const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        p += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    p = std::clamp(p, 0.0, 1.0);
    return {d, p};
}

double kde_density_at(const std::vector<double>& sample, double x) {
    if (sample.empty()) throw ValidationError("kde_density_at: empty sample");
    const double n = static_cast<double>(sample.size());
    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : sample) var += (v - mean) * (v - mean);
    var /= n;
    const double sd = std::sqrt(var);
    const double h = 1.06 * sd * std::pow(n, -0.2);
    if (!(h > 0.0)) return 0.0;
    const double inv = 1.0 / (h * std::sqrt(2.0 * M_PI));
    double f = 0.0;
    for (double v : sample) {
        const double z = (x - v) / h;
        f += std::exp(-0.5 * z * z);
    }
    return f * inv / n;
}

double upper_quantile(std::vector<double> v, double tail_prob) {
    if (v.empty()) throw ValidationError("upper_quantile: empty sample");
    if (!(tail_prob > 0.0 && tail_prob < 1.0))
        throw ValidationError("upper_quantile: tail probability must be in (0,1)");
    std::sort(v.begin(), v.end());
    const auto r = static_cast<double>(v.size());
    auto idx = static_cast<std::size_t>(std::ceil((1.0 - tail_prob) * r));
    if (idx < 1) idx = 1;
    if (idx > v.size()) idx = v.size();
    return v[idx - 1];
}

}  // namespace binseq::stats
