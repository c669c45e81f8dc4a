#include "binseq/glm.hpp"

#include <cmath>

#include "binseq/errors.hpp"

namespace binseq {

double logistic(double w) {
    if (w >= 0.0) return 1.0 / (1.0 + std::exp(-w));
    const double e = std::exp(w);
    return e / (1.0 + e);
}

double logistic_complement(double w) { return logistic(-w); }

double log1pexp(double w) {
    return std::max(w, 0.0) + std::log1p(std::exp(-std::fabs(w)));
}

double log_choose(int m, int y) {
    return std::lgamma(m + 1.0) - std::lgamma(y + 1.0) - std::lgamma(m - y + 1.0);
}

double loglik_at(const BinomialSeries& series, const Eigen::VectorXd& beta) {
    if (beta.size() != series.r) throw ValidationError("loglik_at: beta has wrong length");
    double ll = 0.0;
    for (int t = 0; t < series.n; ++t) {
        const double w = series.X.row(t).dot(beta);
        ll += series.y[t] * w - series.m[t] * log1pexp(w) + log_choose(series.m[t], series.y[t]);
    }
    return ll;
}

GlmFit fit_glm(const BinomialSeries& series, const GlmOptions& opts) {
    const int n = series.n, r = series.r;
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(r);
    double ll = loglik_at(series, beta);
    int iter = 0;
    bool converged = false;

    Eigen::VectorXd grad(r);
    Eigen::MatrixXd info(r, r);
    const auto eval_grad_info = [&](const Eigen::VectorXd& b) {
        grad.setZero();
        info.setZero();
        for (int t = 0; t < n; ++t) {
            const double w = series.X.row(t).dot(b);
            const double pi = logistic(w);
            const double s2 = series.m[t] * pi * logistic_complement(w);
            const double e = series.y[t] - series.m[t] * pi;
            grad.noalias() += e * series.X.row(t).transpose();
            info.noalias() += s2 * series.X.row(t).transpose() * series.X.row(t);
        }
    };

    for (; iter < opts.max_iter; ++iter) {
        eval_grad_info(beta);
        if (grad.lpNorm<Eigen::Infinity>() <= opts.grad_tol) {
            converged = true;
            break;
        }
        Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
        if (ldlt.info() != Eigen::Success)
            throw NumericError("fit_glm: singular information matrix");
        const Eigen::VectorXd dir = ldlt.solve(grad);
        double step = 1.0;
        Eigen::VectorXd cand;
        double llc = 0.0;
        bool ok = false;
        for (int h = 0; h < 31; ++h) {
            cand = beta + step * dir;
            llc = loglik_at(series, cand);
            if (std::isfinite(llc) && llc >= ll) {
                ok = true;
                break;
            }
            step *= 0.5;
        }
        if (!ok)
            throw ConvergenceError("fit_glm: step-halving failed to improve the log-likelihood",
                                   {beta.data(), beta.data() + r});
        const double dll = llc - ll;
        beta = cand;
        ll = llc;
        if (beta.lpNorm<Eigen::Infinity>() > opts.separation_norm)
            throw SeparationError("fit_glm: separation detected (coefficients diverge)");
        if (dll <= opts.loglik_tol) {
            eval_grad_info(beta);
            if (grad.lpNorm<Eigen::Infinity>() <= opts.grad_tol) {
                converged = true;
                ++iter;
                break;
            }
        }
    }
    if (!converged)
        throw ConvergenceError("fit_glm: no convergence after " + std::to_string(opts.max_iter) +
                               " iterations", {beta.data(), beta.data() + r});

    GlmFit fit;
    fit.beta_hat = beta;
    fit.pi.resize(n);
    fit.sigma2.resize(n);
    for (int t = 0; t < n; ++t) {
        const double w = series.X.row(t).dot(beta);
        fit.pi(t) = logistic(w);
        fit.sigma2(t) = series.m[t] * logistic(w) * logistic_complement(w);
        if (!(fit.pi(t) > 0.0 && fit.pi(t) < 1.0))
            throw NumericError("fit_glm: fitted probability saturated at row " + std::to_string(t + 1));
    }
    fit.loglik = loglik_at(series, beta);
    eval_grad_info(beta);
    fit.info = info;
    fit.converged = true;
    fit.iterations = iter;
    return fit;
}

}  // namespace binseq
