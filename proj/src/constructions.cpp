#include "confalg/constructions.hpp"

namespace confalg {

Presentation loop_algebra(const FiniteAlgebra& g)
{
    CheckReport v = g.validate();
    if (!v.pass())
        throw input_error("loop_algebra: invalid input algebra: " +
                          v.violations.front().where);
    Presentation p;
    p.kind = g.kind;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        p.generators.push_back({g.basis[i], 0, 0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p.set_locality(i, j, 1);
            Element e;
            for (int k = 0; k < n; ++k)
                e.add(k, 0, g.constants[i][j][k]);
            p.set_product(i, j, 0, std::move(e));
        }
    return p;
}

Presentation affinize(const FiniteAlgebra& g)
{
    if (g.kind != AlgKind::Lie)
        throw input_error("affinize: input must be a Lie algebra");
    if (!g.form)
        throw input_error("affinize: input has no bilinear form");
    CheckReport v = g.validate();
    if (!v.pass())
        throw input_error("affinize: invalid input algebra: " +
                          v.violations.front().where);
    Presentation p;
    p.kind = AlgKind::Lie;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        p.generators.push_back({g.basis[i], 0, 0});
    int c = n;
    p.generators.push_back({"c", 0, 1});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p.set_locality(i, j, 2);
            Element e0;
            for (int k = 0; k < n; ++k)
                e0.add(k, 0, g.constants[i][j][k]);
            p.set_product(i, j, 0, std::move(e0));
            p.set_product(i, j, 1, Element::single(c, 0, (*g.form)[i][j]));
        }
    for (int i = 0; i <= n; ++i) {
        p.set_locality(i, c, 0);
        p.set_locality(c, i, 0);
    }
    return p;
}

Presentation commutator_algebra(const Presentation& p)
{
    Presentation out;
    out.kind = AlgKind::Lie;
    out.generators = p.generators;
    int n = p.ngens();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int nl = std::max(p.locality_of(a, b), p.locality_of(b, a));
            out.set_locality(a, b, nl);
            Element ea = Element::generator(a), eb = Element::generator(b);
            for (int k = 0; k < nl; ++k) {
                Element val = nth_product(p, ea, eb, k);
                for (int s = 0; k + s < p.locality_of(b, a); ++s) {
                    Element t = nth_product(p, eb, ea, k + s);
                    if (t.is_zero())
                        continue;
                    val -= apply_derivation(p, t, s).scaled(
                        Rat(sign_pow(k + s)));
                }
                out.set_product(a, b, k, std::move(val));
            }
        }
    return out;
}

Presentation change_kd_basis(const Presentation& p, const PolyMatrix& m,
                             const std::vector<std::string>& new_names)
{
    int n = p.ngens();
    if (static_cast<int>(m.size()) != n ||
        static_cast<int>(new_names.size()) != n)
        throw input_error("change_kd_basis: size mismatch");

    auto to_element = [&](const PolyVec& row) {
        Element e;
        for (int j = 0; j < n; ++j) {
            const DPoly& q = row[j];
            for (long k = 0; k <= q.degree(); ++k) {
                Rat c = q.coeff(static_cast<std::size_t>(k));
                if (c == 0)
                    continue;
                if (p.generators[j].torsion_order != 0) {
                    if (k > 0)
                        continue; // D kills the torsion generator
                    e.add(j, 0, c);
                } else {
                    // D^k = k! D^(k)
                    e.add(j, static_cast<int>(k),
                          c * Rat(factorial(static_cast<unsigned long>(k))));
                }
            }
        }
        return e;
    };

    std::vector<Element> reps;
    reps.reserve(m.size());
    for (const auto& row : m)
        reps.push_back(to_element(row));

    // invert m over k[D] by solving in the truncated coordinate space:
    // express each old generator through the new representatives.
    int cap = 0;
    for (const auto& r : reps)
        cap = std::max(cap, r.max_dpow());
    int solve_cap = cap * n + 1;

    auto coords = [&](const Element& e, int capd) {
        Vec v(static_cast<std::size_t>(n) * (capd + 1), Rat(0));
        for (const auto& [k, c] : e.terms())
            v[static_cast<std::size_t>(k.gen) * (capd + 1) + k.dpow] = c;
        return v;
    };

    std::vector<Vec> basis_rows;
    std::vector<std::pair<int, int>> basis_tags; // (rep index, dpow)
    for (int i = 0; i < n; ++i)
        for (int d = 0; d <= solve_cap - cap; ++d) {
            Element dd = apply_derivation(p, reps[i], d);
            if (dd.is_zero())
                continue;
            basis_rows.push_back(coords(dd, solve_cap));
            basis_tags.emplace_back(i, d);
        }

    std::vector<Element> old_in_new(n); // old generator as Element over NEW gens
    for (int j = 0; j < n; ++j) {
        Vec target = coords(Element::generator(j), solve_cap);
        auto sol = solve_row(basis_rows, target);
        if (!sol)
            throw input_error("change_kd_basis: matrix not invertible over k[D]");
        Element e;
        for (std::size_t t = 0; t < sol->size(); ++t)
            if ((*sol)[t] != 0)
                e.add(basis_tags[t].first, basis_tags[t].second, (*sol)[t]);
        old_in_new[j] = e;
    }

    Presentation out;
    out.kind = p.kind;
    for (int i = 0; i < n; ++i) {
        GeneratorInfo gi = p.generators[i];
        gi.name = new_names[i];
        gi.torsion_order =
            apply_derivation(p, reps[i], 1).is_zero() ? 1 : 0;
        out.generators.push_back(gi);
    }

    auto translate = [&](const Element& e) {
        // rewrite an Element over old generators as one over new generators
        Element r;
        for (const auto& [k, c] : e.terms()) {
            Element base = old_in_new[k.gen];
            // apply D^(dpow) in the new presentation
            Element shifted = apply_derivation(out, base, k.dpow);
            r += shifted.scaled(c);
        }
        return r;
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int bound = effective_locality(p, reps[a], reps[b]);
            int top = -1;
            std::vector<Element> vals(static_cast<std::size_t>(bound));
            for (int k = 0; k < bound; ++k) {
                Element v = nth_product(p, reps[a], reps[b], k);
                vals[static_cast<std::size_t>(k)] = translate(v);
                if (!vals[static_cast<std::size_t>(k)].is_zero())
                    top = k;
            }
            out.set_locality(a, b, top + 1);
            for (int k = 0; k <= top; ++k)
                out.set_product(a, b, k, std::move(vals[static_cast<std::size_t>(k)]));
        }
    return out;
}

} // namespace confalg
