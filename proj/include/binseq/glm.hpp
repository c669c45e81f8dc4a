#pragma once

#include <Eigen/Dense>

#include "binseq/dataset.hpp"

namespace binseq {

// Null-model (no serial dependence) logistic-binomial fit. Every test in the
// library starts from one of these.
struct GlmFit {
    Eigen::VectorXd beta_hat;  // length r
    Eigen::VectorXd pi;        // fitted success probabilities, in (0,1)
    Eigen::VectorXd sigma2;    // m_t pi_t (1 - pi_t)
    double loglik = 0.0;       // includes the log C(m_t, y_t) terms
    Eigen::MatrixXd info;      // Fisher information sum sigma2_t x_t x_t'
    bool converged = false;
    int iterations = 0;
};

struct GlmOptions {
    int max_iter = 100;
    double grad_tol = 1e-10;     // infinity norm
    double loglik_tol = 1e-12;   // |delta loglik|
    double separation_norm = 1e3;
};

// Newton-Raphson with step-halving from beta = 0. Throws SeparationError
// when the iterates run away (no finite MLE) and ConvergenceError (carrying
// the last iterate) when max_iter is exhausted.
GlmFit fit_glm(const BinomialSeries& series, const GlmOptions& opts = {});

// Binomial log-likelihood at an arbitrary coefficient vector, with W = X b.
// Stable for large |W|.
double loglik_at(const BinomialSeries& series, const Eigen::VectorXd& beta);

// Stable helpers shared with the GLARMA recursion.
double logistic(double w);
double logistic_complement(double w);  // 1 - logistic(w), computed directly
double log1pexp(double w);             // log(1 + e^w)
double log_choose(int m, int y);

}  // namespace binseq
