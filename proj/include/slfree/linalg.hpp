#pragma once

#include "slfree/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace slfree {

// Dense matrix over Rational; just enough exact linear algebra for rank,
// solving and nullspace certificates.
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
        a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
    }

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[index(r, c)]; }
    const Rational& at(int r, int c) const { return a_[index(r, c)]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

int rank(Matrix a);

// One solution of A x = b, if any.
std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b);

// Solutions for several right-hand sides sharing one elimination; entry t is
// absent when column t of B is not in the column span of A.
std::vector<std::optional<std::vector<Rational>>> solve_linear_multi(const Matrix& a,
                                                                     const Matrix& b);

// Basis of the kernel of A.
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

}  // namespace slfree
