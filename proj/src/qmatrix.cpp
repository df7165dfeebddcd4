#include "jumploci/qmatrix.hpp"

#include <stdexcept>

namespace jumploci {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("QMatrix shape mismatch in product");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(row, j), at(pivot, j));
        Rational inv = Rational(1) / at(row, col);
        for (std::size_t j = col; j < cols_; ++j)
            at(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0)
                continue;
            Rational f = at(r, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.rref().size();
}

RowSpan row_echelon_basis(const RowSpan& rows, std::size_t width) {
    QMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width)
            throw std::invalid_argument("row width mismatch");
        for (std::size_t j = 0; j < width; ++j)
            m.at(i, j) = rows[i][j];
    }
    auto pivots = m.rref();
    RowSpan out;
    out.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Row r(width);
        for (std::size_t j = 0; j < width; ++j)
            r[j] = m.at(i, j);
        out.push_back(std::move(r));
    }
    return out;
}

bool in_row_span(const RowSpan& echelon, Row v) {
    for (const Row& b : echelon) {
        std::size_t pivot = 0;
        while (pivot < b.size() && b[pivot] == 0)
            ++pivot;
        if (pivot == b.size())
            continue;
        if (v[pivot] == 0)
            continue;
        Rational f = v[pivot];
        for (std::size_t j = pivot; j < v.size(); ++j)
            v[j] -= f * b[j];
    }
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool span_contains(const RowSpan& outer, const RowSpan& inner) {
    for (const Row& r : inner)
        if (!in_row_span(outer, r))
            return false;
    return true;
}

} // namespace jumploci
