#ifndef CONFALG_LINALG_HPP
#define CONFALG_LINALG_HPP

#include "confalg/rational.hpp"

#include <optional>
#include <vector>

namespace confalg {

using Vec = std::vector<Rat>;

// Dense exact matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const Vec& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Incremental row-reduced span of Q-vectors. Rows are kept in reduced
// echelon form; inserting a vector either extends the span or reduces to 0.
class RowSpan {
public:
    explicit RowSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current span; returns the remainder.
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const;

    // Inserts v; returns true if it enlarged the span.
    bool insert(Vec v);

    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates of v in terms of the rows actually inserted is not
    // tracked; use solve() on a QMatrix when coordinates are needed.

private:
    std::size_t dim_;
    std::vector<Vec> rows_;           // reduced echelon rows
    std::vector<std::size_t> pivots_; // pivot column per row
};

// Solve x * A = b for a single row vector b (A given by its rows).
// Returns std::nullopt when inconsistent.
std::optional<Vec> solve_row(const std::vector<Vec>& rows, const Vec& b);

std::size_t rank_of(const std::vector<Vec>& rows);

// Basis of { x in Q^ncols : row . x = 0 for every row }.
std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t ncols);

std::vector<Vec> transpose_rows(const std::vector<Vec>& rows,
                                std::size_t ncols);

// Basis of {x : x * rows_of(A)^T ... } — not needed; we only use spans.

// Extends `inside` (vectors all lying in span(space)) to a basis of
// span(space): returns indices into `space` whose vectors complete it.
std::vector<std::size_t> complete_basis(const std::vector<Vec>& inside,
                                        const std::vector<Vec>& space);

} // namespace confalg

#endif
