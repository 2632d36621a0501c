#include "nucleuslab/rat_matrix.hpp"

#include <stdexcept>

#include "nucleuslab/parallel.hpp"

namespace nlab {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::all_ones(int n) {
    RatMatrix m(n, n);
    for (auto& e : m.data_) e = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : data_)
        if (e != 0) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rational RatMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::hadamard(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("hadamard dimension mismatch");
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * other.data_[i];
    return m;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<Rational> RatMatrix::row(int r) const {
    std::vector<Rational> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix m(a.rows(), b.cols());
    parallel_for(a.rows(), [&](int i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) m.at(i, j) += aik * bkj;
            }
        }
    });
    return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = s * a.at(i, j);
    return m;
}

}  // namespace nlab
