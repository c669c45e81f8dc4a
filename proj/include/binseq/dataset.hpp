#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace binseq {

// Binomial time-series regression data: counts y_t out of m_t trials with
// regressor rows x_t. Row order is time order. Immutable after construction.
struct BinomialSeries {
    std::vector<int> y;   // successes, length n
    std::vector<int> m;   // trials, length n
    Eigen::MatrixXd X;    // n x r regressors; first column may be an intercept
    int n = 0;
    int r = 0;

    // Checks 0 <= y_t <= m_t, m_t >= 1, n > r, and that X has full column
    // rank (singular values below 1e-10 * largest count as zero).
    static BinomialSeries make(std::vector<int> y, std::vector<int> m, Eigen::MatrixXd X);
};

enum class ResidualType { identity = 0, pearson = 1, score = 2 };

// Residual exponent gamma in e_t = sigma_t^{-gamma} (y_t - m_t pi_t).
inline int residual_gamma(ResidualType t) { return static_cast<int>(t); }

ResidualType residual_type_from_string(const std::string& s);
std::string to_string(ResidualType t);

enum class Family { glarma, barma };

// Lag structure of the serial-dependence alternative. Lags must be positive,
// duplicate-free, and sorted ascending.
struct ModelSpec {
    std::vector<int> j_phi;    // autoregressive lags
    std::vector<int> j_theta;  // moving-average lags
    ResidualType residuals = ResidualType::pearson;
    Family family = Family::glarma;

    static ModelSpec make(std::vector<int> j_phi, std::vector<int> j_theta,
                          ResidualType residuals, Family family);
};

struct LagPartition {
    std::vector<int> overlap;  // J_phi ∩ J_theta: lags carrying nuisance omega
    std::vector<int> united;   // J_phi ∪ J_theta: lags carrying psi, ascending
    int psi_len = 0;           // |united|
};

LagPartition lag_sets_partition(const ModelSpec& spec);

// CSV column mapping. Header row is required. Regressor columns default to
// the names x1..xr (consecutive from 1); set x_cols to override.
struct CsvSchema {
    std::string y_col = "y";
    std::string m_col = "m";
    std::vector<std::string> x_cols;  // empty: autodetect x1..xr
    bool add_intercept = false;       // prepend a constant-1 column
};

BinomialSeries load_csv(const std::string& path, const CsvSchema& schema = {});
void save_csv(const std::string& path, const BinomialSeries& series);

}  // namespace binseq
