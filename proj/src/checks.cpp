#include "confalg/checks.hpp"
#include "confalg/parallel.hpp"

#include <sstream>

namespace confalg {

void CheckReport::record(std::string where, Element lhs, Element rhs)
{
    ++violation_count;
    if (violations.size() < kStoredCap)
        violations.push_back(
            {std::move(where), std::move(lhs), std::move(rhs)});
}

CheckReport validate_presentation(const Presentation& p, bool check_grading)
{
    CheckReport rep;
    rep.name = "validate";
    auto names = p.gen_names();
    auto gname = [&](int i) { return names.at(static_cast<std::size_t>(i)); };

    for (int i = 0; i < p.ngens(); ++i) {
        const auto& g = p.generators[i];
        ++rep.checked;
        if (g.weight < 0)
            rep.record("generator " + g.name + ": negative weight", {}, {});
        if (g.torsion_order != 0 && g.torsion_order != 1)
            rep.record("generator " + g.name +
                           ": unsupported torsion order " +
                           std::to_string(g.torsion_order),
                       {}, {});
        for (int j = 0; j < p.ngens(); ++j)
            if (i != j && p.generators[i].name == p.generators[j].name) {
                rep.record("duplicate generator name " + g.name, {}, {});
                break;
            }
    }

    for (const auto& [key, n] : p.locality) {
        ++rep.checked;
        auto [a, b] = key;
        if (a < 0 || a >= p.ngens() || b < 0 || b >= p.ngens()) {
            rep.record("locality row with unknown generator", {}, {});
            continue;
        }
        if (n < 0)
            rep.record("negative locality N(" + gname(a) + "," + gname(b) + ")",
                       {}, {});
        if (!p.locality.count({b, a}))
            rep.record("locality domain not symmetric: N(" + gname(b) + "," +
                           gname(a) + ") missing",
                       {}, {});
    }

    for (const auto& [key, e] : p.sc_table) {
        ++rep.checked;
        auto [a, b, n] = key;
        std::ostringstream os;
        if (a < 0 || a >= p.ngens() || b < 0 || b >= p.ngens()) {
            rep.record("product row with unknown generator", e, {});
            continue;
        }
        os << gname(a) << "(" << n << ")" << gname(b);
        if (e.is_zero())
            continue;
        if (n < 0) {
            rep.record(os.str() + ": negative index", e, {});
            continue;
        }
        if (n >= p.locality_of(a, b))
            rep.record(os.str() + ": index at or above locality bound " +
                           std::to_string(p.locality_of(a, b)),
                       e, {});
        if (p.generators[a].torsion_order != 0)
            rep.record(os.str() + ": torsion generator fails to annihilate on the left",
                       e, {});
        if (p.generators[b].torsion_order != 0)
            rep.record(os.str() + ": torsion generator fails to annihilate on the right",
                       e, {});
        for (const auto& [t, c] : e.terms()) {
            if (t.gen < 0 || t.gen >= p.ngens()) {
                rep.record(os.str() + ": unknown generator in value", e, {});
                continue;
            }
            if (t.dpow > 0 && p.generators[t.gen].torsion_order != 0)
                rep.record(os.str() + ": positive D-power on torsion generator " +
                               gname(t.gen),
                           e, {});
            if (check_grading) {
                int want = p.generators[a].weight + p.generators[b].weight + n;
                if (p.generators[t.gen].weight - t.dpow != want)
                    rep.record(os.str() + ": term on " + gname(t.gen) +
                                   " breaks the weight grading",
                               e, {});
            }
        }
    }
    return rep;
}

namespace {

struct GridAcc {
    std::size_t checked = 0;
    CheckReport rep;
};

std::string triple_desc(const Presentation& p, int a, int b, int c, int m,
                        int n)
{
    std::ostringstream os;
    os << p.generators[a].name << "," << p.generators[b].name << ","
       << p.generators[c].name << " m=" << m << " n=" << n;
    return os.str();
}

} // namespace

CheckReport check_conformal_associativity(const Presentation& p, int m_max,
                                          int n_max, int threads)
{
    int g = p.ngens();
    std::size_t total = static_cast<std::size_t>(g) * g * g;
    auto task = [&](std::size_t idx) {
        GridAcc acc;
        int a = static_cast<int>(idx / (g * g));
        int b = static_cast<int>((idx / g) % g);
        int c = static_cast<int>(idx % g);
        Element ea = Element::generator(a), eb = Element::generator(b),
                ec = Element::generator(c);
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n) {
                Element lhs = nth_product(p, nth_product(p, ea, eb, m), ec, n);
                Element rhs;
                for (int s = 0; s <= m; ++s) {
                    Element inner = nth_product(p, eb, ec, n + s);
                    if (inner.is_zero())
                        continue;
                    Rat f = Rat(sign_pow(s) *
                                binom(static_cast<long>(m), static_cast<long>(s)));
                    rhs += nth_product(p, ea, inner, m - s).scaled(f);
                }
                ++acc.checked;
                if (!(lhs == rhs))
                    acc.rep.record(triple_desc(p, a, b, c, m, n), lhs, rhs);
            }
        return acc;
    };
    auto merge = [](GridAcc& into, GridAcc part) {
        into.checked += part.checked;
        into.rep.violation_count += part.rep.violation_count;
        for (auto& v : part.rep.violations)
            if (into.rep.violations.size() < CheckReport::kStoredCap)
                into.rep.violations.push_back(std::move(v));
    };
    GridAcc acc = parallel_map_reduce<GridAcc>(total, threads, task, merge, {});
    acc.rep.name = "conformal-associativity";
    acc.rep.params =
        "m_max=" + std::to_string(m_max) + " n_max=" + std::to_string(n_max);
    acc.rep.checked = acc.checked;
    return acc.rep;
}

CheckReport check_conformal_jacobi(const Presentation& p, int m_max, int n_max,
                                   int threads)
{
    int g = p.ngens();
    std::size_t total = static_cast<std::size_t>(g) * g * g;
    auto task = [&](std::size_t idx) {
        GridAcc acc;
        int a = static_cast<int>(idx / (g * g));
        int b = static_cast<int>((idx / g) % g);
        int c = static_cast<int>(idx % g);
        Element ea = Element::generator(a), eb = Element::generator(b),
                ec = Element::generator(c);
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n) {
                Element lhs = nth_product(p, nth_product(p, ea, eb, m), ec, n);
                Element rhs;
                for (int s = 0; s <= m; ++s) {
                    Rat f = Rat(sign_pow(s) *
                                binom(static_cast<long>(m), static_cast<long>(s)));
                    Element t1 = nth_product(p, eb, ec, n + s);
                    if (!t1.is_zero())
                        rhs += nth_product(p, ea, t1, m - s).scaled(f);
                    Element t2 = nth_product(p, ea, ec, m - s);
                    if (!t2.is_zero())
                        rhs -= nth_product(p, eb, t2, n + s).scaled(f);
                }
                ++acc.checked;
                if (!(lhs == rhs))
                    acc.rep.record(triple_desc(p, a, b, c, m, n), lhs, rhs);
            }
        return acc;
    };
    auto merge = [](GridAcc& into, GridAcc part) {
        into.checked += part.checked;
        into.rep.violation_count += part.rep.violation_count;
        for (auto& v : part.rep.violations)
            if (into.rep.violations.size() < CheckReport::kStoredCap)
                into.rep.violations.push_back(std::move(v));
    };
    GridAcc acc = parallel_map_reduce<GridAcc>(total, threads, task, merge, {});
    acc.rep.name = "conformal-jacobi";
    acc.rep.params =
        "m_max=" + std::to_string(m_max) + " n_max=" + std::to_string(n_max);
    acc.rep.checked = acc.checked;
    return acc.rep;
}

CheckReport check_quasi_symmetry(const Presentation& p, int sign, int n_max,
                                 int threads)
{
    if (sign != 1 && sign != -1)
        throw input_error("quasi-symmetry sign must be +1 or -1");
    int g = p.ngens();
    std::size_t total = static_cast<std::size_t>(g) * g;
    auto task = [&](std::size_t idx) {
        GridAcc acc;
        int a = static_cast<int>(idx / g);
        int b = static_cast<int>(idx % g);
        Element ea = Element::generator(a), eb = Element::generator(b);
        int smax = p.locality_of(b, a);
        for (int n = 0; n <= n_max; ++n) {
            Element lhs = nth_product(p, ea, eb, n);
            Element rhs;
            for (int s = 0; n + s < smax; ++s) {
                Element t = nth_product(p, eb, ea, n + s);
                if (t.is_zero())
                    continue;
                rhs += apply_derivation(p, t, s).scaled(
                    Rat(sign * sign_pow(s + n)));
            }
            ++acc.checked;
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << p.generators[a].name << "," << p.generators[b].name
                   << " n=" << n;
                acc.rep.record(os.str(), lhs, rhs);
            }
        }
        return acc;
    };
    auto merge = [](GridAcc& into, GridAcc part) {
        into.checked += part.checked;
        into.rep.violation_count += part.rep.violation_count;
        for (auto& v : part.rep.violations)
            if (into.rep.violations.size() < CheckReport::kStoredCap)
                into.rep.violations.push_back(std::move(v));
    };
    GridAcc acc = parallel_map_reduce<GridAcc>(total, threads, task, merge, {});
    acc.rep.name = sign > 0 ? "quasi-symmetry(+)" : "quasi-symmetry(-)";
    acc.rep.params = "n_max=" + std::to_string(n_max);
    acc.rep.checked = acc.checked;
    return acc.rep;
}

} // namespace confalg
