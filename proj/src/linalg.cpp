#include "slfree/linalg.hpp"

namespace slfree {
namespace {

// Reduced row echelon form, restricted to the first pivot_cols columns;
// returns the pivot column of each pivot row.
std::vector<int> reduce(Matrix& m, int pivot_cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < pivot_cols && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row) {
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        }
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<int> reduce(Matrix& m) { return reduce(m, m.cols()); }

}  // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("shape mismatch");
    Matrix out = *this;
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] += o.a_[t];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("shape mismatch");
    Matrix out = *this;
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] -= o.a_[t];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += v * o.at(k, c);
        }
    }
    return out;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out = *this;
    for (auto& v : out.a_) v *= c;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_) {
        if (v != 0) return false;
    }
    return true;
}

int rank(Matrix a) { return static_cast<int>(reduce(a).size()); }

std::optional<std::vector<Rational>> solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("shape mismatch");
    Matrix rhs(a.rows(), 1);
    for (int r = 0; r < a.rows(); ++r) rhs.at(r, 0) = b[static_cast<std::size_t>(r)];
    return solve_linear_multi(a, rhs)[0];
}

std::vector<std::optional<std::vector<Rational>>> solve_linear_multi(const Matrix& a,
                                                                     const Matrix& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("shape mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    std::vector<int> pivots = reduce(aug, a.cols());

    std::vector<std::optional<std::vector<Rational>>> out;
    out.reserve(static_cast<std::size_t>(b.cols()));
    for (int t = 0; t < b.cols(); ++t) {
        // rows past the pivot rows have an all-zero A-part, so consistency
        // just needs their rhs entries to vanish
        bool ok = true;
        for (int r = static_cast<int>(pivots.size()); r < a.rows() && ok; ++r) {
            if (aug.at(r, a.cols() + t) != 0) ok = false;
        }
        if (!ok) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols() + t);
        }
        out.emplace_back(std::move(x));
    }
    return out;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& a) {
    Matrix m = a;
    std::vector<int> pivots = reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(a.cols()), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace slfree
