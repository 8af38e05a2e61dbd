#include "confalg/linalg.hpp"

#include <cassert>

namespace confalg {

void QMatrix::append_row(const Vec& row)
{
    assert(row.size() == cols_ || rows_ == 0);
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Vec RowSpan::reduce(Vec v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat f = c; // pivot entries are normalized to 1
            for (std::size_t j = 0; j < dim_; ++j)
                if (rows_[r][j] != 0)
                    v[j] -= f * rows_[r][j];
        }
    }
    return v;
}

bool RowSpan::contains(const Vec& v) const
{
    Vec r = reduce(v);
    for (const Rat& c : r)
        if (c != 0)
            return false;
    return true;
}

bool RowSpan::insert(Vec v)
{
    v = reduce(std::move(v));
    std::size_t p = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p == dim_)
        return false;
    Rat inv = Rat(1) / v[p];
    for (auto& c : v)
        c *= inv;
    // back-substitute into existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = rows_[r][p];
        if (c != 0) {
            Rat f = c;
            for (std::size_t j = 0; j < dim_; ++j)
                if (v[j] != 0)
                    rows_[r][j] -= f * v[j];
        }
    }
    // keep rows ordered by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

std::optional<Vec> solve_row(const std::vector<Vec>& rows, const Vec& b)
{
    if (rows.empty()) {
        for (const Rat& c : b)
            if (c != 0)
                return std::nullopt;
        return Vec{};
    }
    std::size_t dim = b.size();
    std::size_t n = rows.size();
    // augmented elimination tracking coordinates
    std::vector<Vec> work = rows;
    std::vector<Vec> coords(n, Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        coords[i][i] = 1;

    Vec target = b;
    Vec tcoord(n, Rat(0));

    std::vector<std::size_t> pivots;
    std::vector<std::size_t> used;
    std::vector<bool> taken(n, false);
    for (std::size_t col = 0; col < dim && used.size() < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!taken[i] && work[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == n)
            continue;
        taken[sel] = true;
        used.push_back(sel);
        pivots.push_back(col);
        Rat inv = Rat(1) / work[sel][col];
        for (std::size_t j = 0; j < dim; ++j)
            work[sel][j] *= inv;
        for (std::size_t j = 0; j < n; ++j)
            coords[sel][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == sel)
                continue;
            const Rat c = work[i][col];
            if (c != 0) {
                for (std::size_t j = 0; j < dim; ++j)
                    work[i][j] -= c * work[sel][j];
                for (std::size_t j = 0; j < n; ++j)
                    coords[i][j] -= c * coords[sel][j];
            }
        }
        const Rat c = target[col];
        if (c != 0) {
            for (std::size_t j = 0; j < dim; ++j)
                target[j] -= c * work[sel][j];
            for (std::size_t j = 0; j < n; ++j)
                tcoord[j] -= c * coords[sel][j];
        }
    }
    for (const Rat& c : target)
        if (c != 0)
            return std::nullopt;
    Vec x(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        x[j] = -tcoord[j];
    return x;
}

std::size_t rank_of(const std::vector<Vec>& rows)
{
    if (rows.empty())
        return 0;
    RowSpan span(rows.front().size());
    for (const auto& r : rows)
        span.insert(r);
    return span.rank();
}

std::vector<Vec> transpose_rows(const std::vector<Vec>& rows,
                                std::size_t ncols)
{
    std::vector<Vec> out(ncols, Vec(rows.size(), Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            if (rows[i][j] != 0)
                out[j][i] = rows[i][j];
    return out;
}

std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t ncols)
{
    RowSpan span(ncols);
    for (const auto& r : rows)
        span.insert(r);
    // reduced echelon rows; free columns parameterize the kernel
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : span.pivots())
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        Vec x(ncols, Rat(0));
        x[f] = 1;
        for (std::size_t r = 0; r < span.rank(); ++r)
            x[span.pivots()[r]] = -span.rows()[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::size_t> complete_basis(const std::vector<Vec>& inside,
                                        const std::vector<Vec>& space)
{
    std::size_t dim = space.empty() ? (inside.empty() ? 0 : inside.front().size())
                                    : space.front().size();
    RowSpan span(dim);
    for (const auto& r : inside)
        span.insert(r);
    std::vector<std::size_t> extension;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (span.insert(space[i]))
            extension.push_back(i);
    return extension;
}

} // namespace confalg
