#include "confalg/kdmodule.hpp"

#include <algorithm>
#include <cassert>

namespace confalg {

namespace {

PolyMatrix identity(std::size_t n)
{
    PolyMatrix m(n, PolyVec(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = DPoly(Rat(1));
    return m;
}

} // namespace

PolyVec mul_row_matrix(const PolyVec& v, const PolyMatrix& m)
{
    std::size_t n = m.empty() ? 0 : m.front().size();
    PolyVec out(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!m[i][j].is_zero())
                out[j] += v[i] * m[i][j];
        }
    }
    return out;
}

SmithResult smith_normal_form(PolyMatrix a, std::size_t ncols)
{
    std::size_t nrows = a.size();
    SmithResult res;
    res.ncols = ncols;
    res.V = identity(ncols);
    res.Vinv = identity(ncols);

    auto col_sub = [&](std::size_t j, std::size_t i, const DPoly& q) {
        // col_j -= q * col_i
        for (std::size_t r = 0; r < nrows; ++r)
            a[r][j] -= q * a[r][i];
        for (std::size_t r = 0; r < ncols; ++r)
            res.V[r][j] -= q * res.V[r][i];
        for (std::size_t c = 0; c < ncols; ++c)
            res.Vinv[i][c] += q * res.Vinv[j][c];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < nrows; ++r)
            std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < ncols; ++r)
            std::swap(res.V[r][i], res.V[r][j]);
        std::swap(res.Vinv[i], res.Vinv[j]);
    };
    auto col_scale = [&](std::size_t j, const Rat& c) {
        for (std::size_t r = 0; r < nrows; ++r)
            a[r][j] = a[r][j].scaled(c);
        for (std::size_t r = 0; r < ncols; ++r)
            res.V[r][j] = res.V[r][j].scaled(c);
        Rat inv = Rat(1) / c;
        for (std::size_t c2 = 0; c2 < ncols; ++c2)
            res.Vinv[j][c2] = res.Vinv[j][c2].scaled(inv);
    };
    auto row_sub = [&](std::size_t i, std::size_t k, const DPoly& q) {
        // row_i -= q * row_k
        for (std::size_t c = 0; c < ncols; ++c)
            a[i][c] -= q * a[k][c];
    };

    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // locate minimal-degree nonzero entry in the trailing submatrix
        std::size_t bi = nrows, bj = ncols;
        long bdeg = -1;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j)
                if (!a[i][j].is_zero() &&
                    (bdeg < 0 || a[i][j].degree() < bdeg)) {
                    bi = i;
                    bj = j;
                    bdeg = a[i][j].degree();
                }
        if (bdeg < 0)
            break;
        if (bi != t)
            std::swap(a[bi], a[t]);
        if (bj != t)
            col_swap(bj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nrows; ++i)
                if (!a[i][t].is_zero()) {
                    auto [q, r] = a[i][t].divmod(a[t][t]);
                    row_sub(i, t, q);
                    if (!a[i][t].is_zero()) {
                        std::swap(a[i], a[t]);
                        clean = false;
                    }
                }
            for (std::size_t j = t + 1; j < ncols; ++j)
                if (!a[t][j].is_zero()) {
                    auto [q, r] = a[t][j].divmod(a[t][t]);
                    col_sub(j, t, q);
                    if (!a[t][j].is_zero()) {
                        col_swap(j, t);
                        clean = false;
                    }
                }
        }
        // monic pivot
        if (a[t][t].lead() != 1)
            col_scale(t, Rat(1) / a[t][t].lead());
        ++t;
    }
    res.diag.resize(t);
    for (std::size_t i = 0; i < t; ++i)
        res.diag[i] = a[i][i];
    return res;
}

bool MixedVec::is_zero() const
{
    for (const auto& p : free_part)
        if (!p.is_zero())
            return false;
    for (const auto& c : scalar_part)
        if (c != 0)
            return false;
    return true;
}

namespace {

// row_i -= q(D) * row_k in the mixed module: D acts as 0 on scalars.
void mixed_sub(MixedVec& ri, const MixedVec& rk, const DPoly& q)
{
    for (std::size_t c = 0; c < ri.free_part.size(); ++c)
        ri.free_part[c] -= q * rk.free_part[c];
    Rat q0 = q.constant_term();
    if (q0 != 0)
        for (std::size_t c = 0; c < ri.scalar_part.size(); ++c)
            ri.scalar_part[c] -= q0 * rk.scalar_part[c];
}

} // namespace

SubmoduleBasis kd_submodule_basis(std::vector<MixedVec> rows)
{
    SubmoduleBasis out;
    if (rows.empty())
        return out;
    std::size_t nfree = rows.front().free_part.size();

    std::vector<MixedVec> active = std::move(rows);
    for (std::size_t col = 0; col < nfree; ++col) {
        for (;;) {
            std::size_t sel = active.size();
            long bdeg = -1;
            for (std::size_t i = 0; i < active.size(); ++i)
                if (!active[i].free_part[col].is_zero() &&
                    (bdeg < 0 || active[i].free_part[col].degree() < bdeg)) {
                    sel = i;
                    bdeg = active[i].free_part[col].degree();
                }
            if (sel == active.size())
                break;
            bool reduced_all = true;
            for (std::size_t i = 0; i < active.size(); ++i) {
                if (i == sel || active[i].free_part[col].is_zero())
                    continue;
                auto [q, r] =
                    active[i].free_part[col].divmod(active[sel].free_part[col]);
                mixed_sub(active[i], active[sel], q);
                if (!active[i].free_part[col].is_zero())
                    reduced_all = false;
            }
            if (reduced_all) {
                out.free_rows.push_back(active[sel]);
                active.erase(active.begin() + sel);
                break;
            }
        }
    }
    // remaining rows live in the scalar block
    std::size_t nscalar =
        active.empty() ? 0 : active.front().scalar_part.size();
    RowSpan span(nscalar);
    for (auto& r : active) {
        if (r.is_zero())
            continue;
        if (span.insert(r.scalar_part))
            out.torsion_rows.push_back(r);
    }
    // canonical torsion rows: reduced echelon of the scalar block
    out.torsion_rows.clear();
    for (std::size_t i = 0; i < span.rank(); ++i) {
        MixedVec v;
        v.free_part.assign(nfree, DPoly());
        v.scalar_part = span.rows()[i];
        out.torsion_rows.push_back(std::move(v));
    }
    return out;
}

} // namespace confalg
