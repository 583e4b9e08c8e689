#ifndef AFFSTR_EXACT_HPP
#define AFFSTR_EXACT_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "affstr/error.hpp"

namespace affstr {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

bool is_integer(const Rational& v);

/// Converts an integral rational, throwing ConsistencyError otherwise.
Integer to_integer(const Rational& v);

/// Fits the value into a long; throws ResourceError on overflow.
long to_long(const Integer& v);

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw ConfigError("ragged matrix initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);

/// Gauss-Jordan inverse; throws ConsistencyError if singular.
RatMatrix inverse(const RatMatrix& m);

Rational determinant(RatMatrix m);

/// Solves m x = rhs exactly. m must be square and nonsingular.
std::vector<Rational> solve(const RatMatrix& m, std::span<const Rational> rhs);

std::vector<Rational> mat_vec(const RatMatrix& m, std::span<const Rational> v);

/// Smith normal form U A V = D of an integer matrix.
struct SmithForm {
    IntMatrix left;   // U
    IntMatrix right;  // V
    std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a);

} // namespace affstr

#endif
