#include "confalg/finite_algebra.hpp"

#include <sstream>

namespace confalg {

Vec FiniteAlgebra::product(const Vec& x, const Vec& y) const
{
    Vec out(basis.size(), Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (y[j] == 0)
                continue;
            Rat f = x[i] * y[j];
            const Vec& c = constants[i][j];
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (c[k] != 0)
                    out[k] += f * c[k];
        }
    }
    return out;
}

Rat FiniteAlgebra::pair(const Vec& x, const Vec& y) const
{
    Rat out(0);
    if (!form)
        return out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (y[j] != 0 && (*form)[i][j] != 0)
                out += x[i] * y[j] * (*form)[i][j];
    }
    return out;
}

namespace {

Vec unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

bool vec_zero(const Vec& v)
{
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

Vec vec_sub(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

} // namespace

CheckReport FiniteAlgebra::validate() const
{
    CheckReport rep;
    rep.name = "finite-algebra";
    int n = dim();
    if (static_cast<int>(constants.size()) != n)
        throw input_error("finite algebra: constants table has wrong size");
    for (const auto& row : constants) {
        if (static_cast<int>(row.size()) != n)
            throw input_error("finite algebra: constants table has wrong size");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != n)
                throw input_error(
                    "finite algebra: constants table has wrong size");
    }

    auto bname = [&](int i) { return basis[static_cast<std::size_t>(i)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++rep.checked;
                Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
                if (kind == AlgKind::Lie) {
                    // antisymmetry (checked at k=0 once per pair)
                    if (k == 0) {
                        Vec anti = product(ei, ej);
                        Vec ji = product(ej, ei);
                        for (int t = 0; t < n; ++t)
                            anti[t] += ji[t];
                        if (!vec_zero(anti))
                            rep.record("antisymmetry fails at [" + bname(i) +
                                           "," + bname(j) + "]",
                                       {}, {});
                    }
                    Vec lhs = product(product(ei, ej), ek);
                    Vec rhs = vec_sub(product(ei, product(ej, ek)),
                                      product(ej, product(ei, ek)));
                    if (!vec_zero(vec_sub(lhs, rhs)))
                        rep.record("Jacobi fails at (" + bname(i) + "," +
                                       bname(j) + "," + bname(k) + ")",
                                   {}, {});
                } else {
                    Vec lhs = product(product(ei, ej), ek);
                    Vec rhs = product(ei, product(ej, ek));
                    if (!vec_zero(vec_sub(lhs, rhs)))
                        rep.record("associativity fails at (" + bname(i) + "," +
                                       bname(j) + "," + bname(k) + ")",
                                   {}, {});
                }
                if (form) {
                    // <e_i e_j, e_k> = <e_i, e_j e_k>
                    Rat lhs = pair(product(ei, ej), ek);
                    Rat rhs = pair(ei, product(ej, ek));
                    if (lhs != rhs)
                        rep.record("form not invariant at (" + bname(i) + "," +
                                       bname(j) + "," + bname(k) + ")",
                                   {}, {});
                }
            }
    if (form) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((*form)[i][j] != (*form)[j][i]) {
                    rep.record("form not symmetric", {}, {});
                    break;
                }
    }
    return rep;
}

FiniteAlgebra FiniteAlgebra::sl2()
{
    FiniteAlgebra g;
    g.kind = AlgKind::Lie;
    g.basis = {"e", "f", "h"};
    int n = 3;
    g.constants.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    auto set = [&](int i, int j, int k, int c) {
        g.constants[i][j][k] = c;
        g.constants[j][i][k] = -c;
    };
    // [e,f]=h, [h,e]=2e, [h,f]=-2f
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    return g;
}

FiniteAlgebra FiniteAlgebra::sl2_killing()
{
    FiniteAlgebra g = sl2();
    std::vector<Vec> form(3, Vec(3, Rat(0)));
    form[0][1] = form[1][0] = 4; // <e,f> = tr(ad e ad f) = 4
    form[2][2] = 8;              // <h,h> = 8
    g.form = form;
    return g;
}

FiniteAlgebra FiniteAlgebra::mat2()
{
    FiniteAlgebra a;
    a.kind = AlgKind::Associative;
    a.basis = {"E11", "E12", "E21", "E22"};
    int n = 4;
    a.constants.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    auto idx = [](int r, int c) { return 2 * r + c; };
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    if (c == r2)
                        a.constants[idx(r, c)][idx(r2, c2)][idx(r, c2)] = 1;
    return a;
}

FiniteAlgebra FiniteAlgebra::heis3()
{
    FiniteAlgebra g;
    g.kind = AlgKind::Lie;
    g.basis = {"x", "y", "z"};
    g.constants.assign(3, std::vector<Vec>(3, Vec(3, Rat(0))));
    g.constants[0][1][2] = 1;
    g.constants[1][0][2] = -1;
    return g;
}

FiniteAlgebra FiniteAlgebra::abelian(int k)
{
    if (k < 1)
        throw input_error("abelian rank must be positive");
    FiniteAlgebra g;
    g.kind = AlgKind::Lie;
    for (int i = 0; i < k; ++i)
        g.basis.push_back("a" + std::to_string(i + 1));
    g.constants.assign(k, std::vector<Vec>(k, Vec(k, Rat(0))));
    return g;
}

FiniteAlgebra FiniteAlgebra::gl2_commutator()
{
    FiniteAlgebra m = mat2();
    FiniteAlgebra g;
    g.kind = AlgKind::Lie;
    g.basis = m.basis;
    int n = m.dim();
    g.constants.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ij = m.product(unit(n, i), unit(n, j));
            Vec ji = m.product(unit(n, j), unit(n, i));
            for (int k = 0; k < n; ++k)
                g.constants[i][j][k] = ij[k] - ji[k];
        }
    return g;
}

std::optional<FiniteAlgebra> FiniteAlgebra::named(const std::string& name)
{
    if (name == "sl2")
        return sl2_killing();
    if (name == "mat2")
        return mat2();
    if (name == "heis3")
        return heis3();
    if (name.rfind("abelian:", 0) == 0) {
        int k = std::stoi(name.substr(8));
        return abelian(k);
    }
    return std::nullopt;
}

} // namespace confalg
