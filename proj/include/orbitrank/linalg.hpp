#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "orbitrank/rational.hpp"

namespace orbitrank {

/// Minimal dense matrix over an arbitrary scalar, row-major.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T init = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Exact rank over the rationals.
///
/// Rows are scaled to integers (rank-preserving), then reduced by fraction-free
/// Bareiss elimination: every intermediate entry is a minor of the scaled
/// matrix, so all divisions are exact and no rounding can occur.
inline int rank_exact(const RationalMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    Matrix<BigInt> a(nr, nc);
    for (int i = 0; i < nr; ++i) {
        BigInt scale = 1;
        for (int j = 0; j < nc; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < nc; ++j) {
            Rational v = m(i, j) * Rational(scale);
            v.canonicalize();
            a(i, j) = v.get_num();
        }
    }

    std::vector<int> row(nr), col(nc);
    for (int i = 0; i < nr; ++i) row[i] = i;
    for (int j = 0; j < nc; ++j) col[j] = j;

    BigInt prev = 1;
    int r = 0;
    while (r < nr && r < nc) {
        int pi = -1, pj = -1;
        for (int i = r; i < nr && pi < 0; ++i)
            for (int j = r; j < nc; ++j)
                if (a(row[i], col[j]) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(row[r], row[pi]);
        std::swap(col[r], col[pj]);

        const BigInt& pivot = a(row[r], col[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = r + 1; j < nc; ++j) {
                BigInt t = pivot * a(row[i], col[j]) - a(row[i], col[r]) * a(row[r], col[j]);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(row[i], col[j]) = std::move(t);
            }
        }
        prev = pivot;
        ++r;
    }
    return r;
}

inline Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = to_double(m(i, j));
    return e;
}

/// Floating-point rank by SVD: number of singular values above
/// rel_tol * sigma_max. Cross-check oracle only; never authoritative.
inline int rank_svd(const RationalMatrix& m, double rel_tol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = rel_tol * sv(0);
    if (sv(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

}  // namespace orbitrank
