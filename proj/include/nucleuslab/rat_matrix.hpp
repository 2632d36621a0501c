#pragma once

#include <vector>

#include "nucleuslab/rational.hpp"

namespace nlab {

/// Dense row-major matrix over Q. Value type; all operations return fresh
/// matrices and never mutate their arguments.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }
    static RatMatrix all_ones(int n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_symmetric() const;

    RatMatrix transpose() const;
    Rational trace() const;

    /// Entrywise (Hadamard) product.
    RatMatrix hadamard(const RatMatrix& other) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> row(int r) const;

    bool operator==(const RatMatrix& other) const = default;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);

}  // namespace nlab
