#pragma once

#include "jumploci/rational.hpp"

#include <cstddef>
#include <vector>

namespace jumploci {

// Dense matrix over Q with exact Gaussian elimination.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix operator*(const QMatrix& rhs) const;
    bool operator==(const QMatrix&) const = default;

    bool is_zero() const;
    std::size_t rank() const;

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref();

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Row-space helpers shared by ideal normal forms and span computations.
using Row = std::vector<Rational>;
using RowSpan = std::vector<Row>;

/// Reduced row-echelon basis of the span of `rows`: zero rows dropped,
/// pivots scaled to 1, pivot columns cleared. Canonical, so two spans are
/// equal iff their bases compare equal.
RowSpan row_echelon_basis(const RowSpan& rows, std::size_t width);

/// True iff v lies in the span of a basis produced by row_echelon_basis.
bool in_row_span(const RowSpan& echelon, Row v);

/// True iff every row of `inner` lies in the span of `outer` (both echelon).
bool span_contains(const RowSpan& outer, const RowSpan& inner);

} // namespace jumploci
