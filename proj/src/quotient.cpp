#include "confalg/constructions.hpp"

#include <algorithm>

namespace confalg {

namespace {

PolyVec lift_element(const Presentation& p, const Element& e)
{
    PolyVec v(static_cast<std::size_t>(p.ngens()));
    for (const auto& [k, c] : e.terms()) {
        // c * D^(k) g = (c / k!) D^k g
        Rat mono = c / Rat(factorial(static_cast<unsigned long>(k.dpow)));
        v[static_cast<std::size_t>(k.gen)] +=
            DPoly::monomial(static_cast<std::size_t>(k.dpow), mono);
    }
    return v;
}

Element unlift(const Presentation& p, const PolyVec& v, int gen_count)
{
    Element e;
    for (int j = 0; j < gen_count; ++j) {
        const DPoly& q = v[static_cast<std::size_t>(j)];
        for (long k = 0; k <= q.degree(); ++k) {
            Rat c = q.coeff(static_cast<std::size_t>(k));
            if (c == 0)
                continue;
            if (p.generators[j].torsion_order != 0) {
                if (k == 0)
                    e.add(j, 0, c);
                // D^k kills the torsion generator for k >= 1
            } else {
                e.add(j, static_cast<int>(k),
                      c * Rat(factorial(static_cast<unsigned long>(k))));
            }
        }
    }
    return e;
}

Vec element_coords(const Presentation& p, const Element& e, int cap)
{
    Vec v(static_cast<std::size_t>(p.ngens()) * (cap + 1), Rat(0));
    for (const auto& [k, c] : e.terms())
        v[static_cast<std::size_t>(k.gen) * (cap + 1) + k.dpow] = c;
    return v;
}

} // namespace

Presentation quotient(const Presentation& p,
                      const std::vector<Element>& ideal_generators,
                      int d_bound)
{
    int n = p.ngens();
    int cap = d_bound;

    // 1. close the k[D]-span of the ideal generators under products with
    //    the presentation generators, inside the D-power cap
    std::vector<Element> gens;
    RowSpan span(static_cast<std::size_t>(n) * (cap + 1));

    auto add_shifts = [&](const Element& e) {
        for (int j = 0;; ++j) {
            Element d = apply_derivation(p, e, j);
            if (d.is_zero())
                break;
            if (d.max_dpow() > cap)
                break;
            span.insert(element_coords(p, d, cap));
        }
    };
    auto push = [&](const Element& e) {
        if (e.is_zero())
            return false;
        if (e.max_dpow() > cap)
            throw budget_error("unbounded ideal: D-power cap exceeded");
        if (span.contains(element_coords(p, e, cap)))
            return false;
        gens.push_back(e);
        add_shifts(e);
        return true;
    };

    for (const auto& e : ideal_generators)
        push(e);

    for (std::size_t head = 0; head < gens.size(); ++head) {
        Element x = gens[head];
        if (gens.size() > 4096)
            throw budget_error("unbounded ideal: generator cap exceeded");
        for (int g = 0; g < n; ++g) {
            Element eg = Element::generator(g);
            int b1 = effective_locality(p, eg, x);
            for (int k = 0; k < b1; ++k)
                push(nth_product(p, eg, x, k));
            int b2 = effective_locality(p, x, eg);
            for (int k = 0; k < b2; ++k)
                push(nth_product(p, x, eg, k));
        }
    }

    // 2. Smith normal form of the lifted relation matrix.  Torsion
    //    generators of p are lifted to free columns with an extra D*e
    //    relation row.
    PolyMatrix rel;
    for (const auto& e : gens)
        rel.push_back(lift_element(p, e));
    for (int j = 0; j < n; ++j)
        if (p.generators[j].torsion_order != 0) {
            PolyVec r(static_cast<std::size_t>(n));
            r[static_cast<std::size_t>(j)] = DPoly::monomial(1);
            rel.push_back(std::move(r));
        }

    SmithResult snf = smith_normal_form(rel, static_cast<std::size_t>(n));

    enum class Fate { Dead, Torsion, Free };
    std::vector<Fate> fate(static_cast<std::size_t>(n), Fate::Free);
    for (std::size_t i = 0; i < snf.diag.size(); ++i) {
        const DPoly& d = snf.diag[i];
        if (d.is_zero()) {
            fate[i] = Fate::Free;
        } else if (d.degree() == 0) {
            fate[i] = Fate::Dead;
        } else if (d.degree() == 1 && d.coeff(0) == 0) {
            fate[i] = Fate::Torsion;
        } else {
            throw input_error("quotient: unsupported k[D]-torsion " + d.str());
        }
    }

    std::vector<int> surviving;
    for (int i = 0; i < n; ++i)
        if (fate[static_cast<std::size_t>(i)] != Fate::Dead)
            surviving.push_back(i);

    // canonical generator order: by the leading term of the representative
    std::vector<Element> col_rep(static_cast<std::size_t>(n));
    for (int col : surviving)
        col_rep[static_cast<std::size_t>(col)] =
            unlift(p, snf.Vinv[static_cast<std::size_t>(col)], n);
    std::stable_sort(surviving.begin(), surviving.end(), [&](int a, int b) {
        const auto& ta = col_rep[static_cast<std::size_t>(a)].terms();
        const auto& tb = col_rep[static_cast<std::size_t>(b)].terms();
        if (ta.empty() || tb.empty())
            return !ta.empty() ? false : !tb.empty();
        return ta.begin()->first < tb.begin()->first;
    });

    Presentation out;
    out.kind = p.kind;
    std::vector<Element> reps; // representative in p of each new generator
    for (std::size_t s = 0; s < surviving.size(); ++s) {
        int col = surviving[s];
        Element rep = col_rep[static_cast<std::size_t>(col)];
        GeneratorInfo gi;
        gi.torsion_order = fate[static_cast<std::size_t>(col)] == Fate::Torsion ? 1 : 0;
        gi.weight = 0;
        if (rep.size() == 1) {
            auto [k, c] = *rep.terms().begin();
            if (k.dpow == 0 && c == 1)
                gi.name = p.generators[k.gen].name;
        }
        if (gi.name.empty())
            gi.name = "q" + std::to_string(s + 1);
        out.generators.push_back(gi);
        reps.push_back(std::move(rep));
    }

    // map from p-elements to elements of the quotient
    auto project = [&](const Element& e) {
        PolyVec v = mul_row_matrix(lift_element(p, e), snf.V);
        Element r;
        for (std::size_t s = 0; s < surviving.size(); ++s) {
            int col = surviving[s];
            DPoly q = v[static_cast<std::size_t>(col)];
            if (fate[static_cast<std::size_t>(col)] == Fate::Torsion) {
                Rat c = q.constant_term();
                if (c != 0)
                    r.add(static_cast<int>(s), 0, c);
            } else {
                for (long k = 0; k <= q.degree(); ++k) {
                    Rat c = q.coeff(static_cast<std::size_t>(k));
                    if (c != 0)
                        r.add(static_cast<int>(s), static_cast<int>(k),
                              c * Rat(factorial(static_cast<unsigned long>(k))));
                }
            }
        }
        return r;
    };

    int m = static_cast<int>(surviving.size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int bound = effective_locality(p, reps[static_cast<std::size_t>(a)],
                                           reps[static_cast<std::size_t>(b)]);
            int top = -1;
            std::vector<Element> vals(static_cast<std::size_t>(bound));
            for (int k = 0; k < bound; ++k) {
                Element prod =
                    nth_product(p, reps[static_cast<std::size_t>(a)],
                                reps[static_cast<std::size_t>(b)], k);
                vals[static_cast<std::size_t>(k)] = project(prod);
                if (!vals[static_cast<std::size_t>(k)].is_zero())
                    top = k;
            }
            out.set_locality(a, b, top + 1);
            for (int k = 0; k <= top; ++k)
                out.set_product(a, b, k,
                                std::move(vals[static_cast<std::size_t>(k)]));
        }
    return out;
}

} // namespace confalg
