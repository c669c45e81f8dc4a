#pragma once

#include <functional>
#include <vector>

namespace binseq::stats {

// Upper tail P(chi2_df > u).
double chisq_sf(double u, int df);

// Upper-tail quantile: u with P(chi2_df > u) = p.
double chisq_upper_quantile(double p, int df);

// CDF of chi2_df, for KS references.
double chisq_cdf(double u, int df);

struct KsResult {
    double statistic;  // D_n
    double p_value;    // asymptotic, with Stephens' small-sample factor
};

// One-sample Kolmogorov-Smirnov test against a continuous reference CDF.
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);

// Gaussian-kernel density estimate at a point, Silverman bandwidth.
double kde_density_at(const std::vector<double>& sample, double x);

// Empirical upper-tail quantile: order statistic ceil((1-p)*R), 1-based,
// of the ascending sorted sample ("reject if statistic exceeds" convention).
double upper_quantile(std::vector<double> sorted_or_not, double tail_prob);

}  // namespace binseq::stats
