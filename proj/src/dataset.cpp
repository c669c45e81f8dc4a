#include "binseq/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "binseq/errors.hpp"

namespace binseq {

BinomialSeries BinomialSeries::make(std::vector<int> y, std::vector<int> m, Eigen::MatrixXd X) {
    const auto n = static_cast<int>(y.size());
    if (static_cast<int>(m.size()) != n || X.rows() != n)
        throw ValidationError("BinomialSeries: y, m, X length mismatch");
    const auto r = static_cast<int>(X.cols());
    if (n <= r)
        throw ValidationError("BinomialSeries: need n > r, got n=" + std::to_string(n) +
                              ", r=" + std::to_string(r));
    for (int t = 0; t < n; ++t) {
        if (m[t] < 1)
            throw ValidationError("BinomialSeries: m must be >= 1 at row " + std::to_string(t + 1));
        if (y[t] < 0 || y[t] > m[t])
            throw ValidationError("BinomialSeries: need 0 <= y <= m at row " + std::to_string(t + 1));
        if (!X.row(t).allFinite())
            throw ValidationError("BinomialSeries: non-finite regressor at row " + std::to_string(t + 1));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    if (rank < r)
        throw DesignError("BinomialSeries: X is rank-deficient (rank " + std::to_string(rank) +
                          " < " + std::to_string(r) + ")");
    BinomialSeries s;
    s.y = std::move(y);
    s.m = std::move(m);
    s.X = std::move(X);
    s.n = n;
    s.r = r;
    return s;
}

ResidualType residual_type_from_string(const std::string& s) {
    if (s == "identity") return ResidualType::identity;
    if (s == "pearson") return ResidualType::pearson;
    if (s == "score") return ResidualType::score;
    throw ValidationError("unknown residual type '" + s + "' (identity|pearson|score)");
}

std::string to_string(ResidualType t) {
    switch (t) {
        case ResidualType::identity: return "identity";
        case ResidualType::pearson: return "pearson";
        case ResidualType::score: return "score";
    }
    return "?";
}

static void check_lags(const std::vector<int>& lags, const char* name) {
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (lags[i] < 1)
            throw ValidationError(std::string(name) + ": lags must be positive");
        if (i > 0 && lags[i] <= lags[i - 1])
            throw ValidationError(std::string(name) + ": lags must be sorted and duplicate-free");
    }
}

ModelSpec ModelSpec::make(std::vector<int> j_phi, std::vector<int> j_theta,
                          ResidualType residuals, Family family) {
    check_lags(j_phi, "j_phi");
    check_lags(j_theta, "j_theta");
    if (family == Family::barma && residuals != ResidualType::identity)
        throw ValidationError("BARMA uses identity residuals only");
    ModelSpec s;
    s.j_phi = std::move(j_phi);
    s.j_theta = std::move(j_theta);
    s.residuals = residuals;
    s.family = family;
    return s;
}

LagPartition lag_sets_partition(const ModelSpec& spec) {
    LagPartition p;
    std::set_intersection(spec.j_phi.begin(), spec.j_phi.end(),
                          spec.j_theta.begin(), spec.j_theta.end(),
                          std::back_inserter(p.overlap));
    std::set_union(spec.j_phi.begin(), spec.j_phi.end(),
                   spec.j_theta.begin(), spec.j_theta.end(),
                   std::back_inserter(p.united));
    p.psi_len = static_cast<int>(p.united.size());
    return p;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    }
    return out;
}

double parse_double(const std::string& s, int row, const std::string& col) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("malformed number '" + s + "' in column " + col +
                         " at data row " + std::to_string(row));
    }
}

int parse_int(const std::string& s, int row, const std::string& col) {
    const double v = parse_double(s, row, col);
    const int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-9)
        throw ParseError("expected integer '" + s + "' in column " + col +
                         " at data row " + std::to_string(row));
    return i;
}

}  // namespace

BinomialSeries load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file '" + path + "'");
    const auto header = split_csv_line(line);

    std::map<std::string, int> col;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (col.count(header[i]))
            throw ParseError("duplicate column '" + header[i] + "'");
        col[header[i]] = static_cast<int>(i);
    }
    if (!col.count(schema.y_col)) throw ParseError("missing column '" + schema.y_col + "'");
    if (!col.count(schema.m_col)) throw ParseError("missing column '" + schema.m_col + "'");

    std::vector<std::string> xcols = schema.x_cols;
    if (xcols.empty()) {
        // autodetect x1..xr, required consecutive from x1
        for (int k = 1;; ++k) {
            const std::string name = "x" + std::to_string(k);
            if (!col.count(name)) break;
            xcols.push_back(name);
        }
        std::set<std::string> known{schema.y_col, schema.m_col};
        known.insert(xcols.begin(), xcols.end());
        for (const auto& h : header)
            if (!known.count(h))
                throw ParseError("unexpected column '" + h + "' (use y, m, x1..xr)");
    } else {
        for (const auto& name : xcols)
            if (!col.count(name)) throw ParseError("missing column '" + name + "'");
    }

    std::vector<int> y, m;
    std::vector<std::vector<double>> xrows;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        const auto f = split_csv_line(line);
        if (f.size() != header.size())
            throw ParseError("row " + std::to_string(row) + " has " + std::to_string(f.size()) +
                             " fields, expected " + std::to_string(header.size()));
        y.push_back(parse_int(f[col[schema.y_col]], row, schema.y_col));
        m.push_back(parse_int(f[col[schema.m_col]], row, schema.m_col));
        std::vector<double> xr;
        xr.reserve(xcols.size());
        for (const auto& name : xcols) xr.push_back(parse_double(f[col[name]], row, name));
        xrows.push_back(std::move(xr));
    }
    if (row == 0) throw ParseError("no data rows in '" + path + "'");

    const int n = row;
    const int rx = static_cast<int>(xcols.size());
    const int r = rx + (schema.add_intercept ? 1 : 0);
    if (r == 0) throw ValidationError("no regressors; pass --intercept or provide x columns");
    Eigen::MatrixXd X(n, r);
    for (int t = 0; t < n; ++t) {
        int c = 0;
        if (schema.add_intercept) X(t, c++) = 1.0;
        for (int k = 0; k < rx; ++k) X(t, c++) = xrows[t][k];
    }
    return BinomialSeries::make(std::move(y), std::move(m), std::move(X));
}

void save_csv(const std::string& path, const BinomialSeries& series) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << "y,m";
    for (int k = 1; k <= series.r; ++k) out << ",x" << k;
    out << "\n";
    char buf[40];
    for (int t = 0; t < series.n; ++t) {
        out << series.y[t] << ',' << series.m[t];
        for (int k = 0; k < series.r; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", series.X(t, k));
            out << ',' << buf;
        }
        out << "\n";
    }
}

}  // namespace binseq
