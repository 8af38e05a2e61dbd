#include "confalg/presentation.hpp"

#include <algorithm>

namespace confalg {

int Presentation::gen_index(const std::string& name) const
{
    auto idx = find_gen(name);
    if (!idx)
        throw input_error("unknown generator '" + name + "'");
    return *idx;
}

std::optional<int> Presentation::find_gen(const std::string& name) const
{
    for (int i = 0; i < ngens(); ++i)
        if (generators[i].name == name)
            return i;
    return std::nullopt;
}

std::vector<std::string> Presentation::gen_names() const
{
    std::vector<std::string> names;
    names.reserve(generators.size());
    for (const auto& g : generators)
        names.push_back(g.name);
    return names;
}

int Presentation::locality_of(int a, int b) const
{
    auto it = locality.find({a, b});
    return it == locality.end() ? 0 : it->second;
}

int Presentation::max_locality() const
{
    int m = 0;
    for (const auto& [k, n] : locality)
        m = std::max(m, n);
    return m;
}

int Presentation::max_sc_dpow() const
{
    int m = 0;
    for (const auto& [k, e] : sc_table)
        m = std::max(m, e.max_dpow());
    return m;
}

const Element* Presentation::sc_entry(int a, int b, int n) const
{
    auto it = sc_table.find({a, b, n});
    return it == sc_table.end() ? nullptr : &it->second;
}

void Presentation::set_product(int a, int b, int n, Element value)
{
    if (value.is_zero())
        sc_table.erase({a, b, n});
    else
        sc_table[{a, b, n}] = std::move(value);
}

void Presentation::set_locality(int a, int b, int n)
{
    locality[{a, b}] = n;
}

bool Presentation::operator==(const Presentation& o) const
{
    return kind == o.kind && generators == o.generators &&
           locality == o.locality && sc_table == o.sc_table;
}

Element apply_derivation(const Presentation& p, const Element& e, int k)
{
    if (k < 0)
        throw input_error("apply_derivation: negative power");
    if (k == 0)
        return e;
    Element out;
    for (const auto& [key, c] : e.terms()) {
        if (p.generators.at(key.gen).torsion_order != 0)
            continue; // D kills torsion generators
        Rat f = c * Rat(binom(key.dpow + k, static_cast<long>(k)));
        out.add(key.gen, key.dpow + k, f);
    }
    return out;
}

namespace {

// g(m)h from the table, with the right-hand derivation rule already folded
// in: g(m)(D^(j)h) = sum_s binom(m,s) D^(j-s)( g(m-s)h ).
Element table_product(const Presentation& p, int g, int m, int h, int j)
{
    Element out;
    long smax = std::min<long>(m, j);
    for (long s = 0; s <= smax; ++s) {
        const Element* sc = p.sc_entry(g, h, m - static_cast<int>(s));
        if (!sc)
            continue;
        Int b = binom(static_cast<long>(m), s);
        if (b == 0)
            continue;
        Element d = apply_derivation(p, *sc, j - static_cast<int>(s));
        out += d.scaled(Rat(b));
    }
    return out;
}

} // namespace

Element nth_product(const Presentation& p, const Element& a, const Element& b,
                    int n)
{
    if (n < 0)
        throw input_error("nth_product: negative index");
    for (const auto& [key, c] : a.terms())
        if (key.gen < 0 || key.gen >= p.ngens())
            throw input_error("nth_product: unknown generator in left factor");
    for (const auto& [key, c] : b.terms())
        if (key.gen < 0 || key.gen >= p.ngens())
            throw input_error("nth_product: unknown generator in right factor");

    Element out;
    for (const auto& [ka, ca] : a.terms()) {
        int m = n - ka.dpow;
        if (m < 0)
            continue;
        Int lb = binom(static_cast<long>(n), static_cast<long>(ka.dpow));
        if (lb == 0)
            continue;
        Rat left = ca * Rat(sign_pow(ka.dpow) * lb);
        for (const auto& [kb, cb] : b.terms()) {
            Element t = table_product(p, ka.gen, m, kb.gen, kb.dpow);
            if (!t.is_zero())
                out += t.scaled(left * cb);
        }
    }
    return out;
}

int effective_locality(const Presentation& p, const Element& a,
                       const Element& b)
{
    int bound = 0;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int n = p.locality_of(ka.gen, kb.gen) + ka.dpow + kb.dpow;
            bound = std::max(bound, n);
        }
    return bound;
}

bool is_central(const Presentation& p, const Element& e, int n_max)
{
    for (int g = 0; g < p.ngens(); ++g) {
        Element gen = Element::generator(g);
        for (int n = 0; n <= n_max; ++n) {
            if (!nth_product(p, e, gen, n).is_zero())
                return false;
            if (!nth_product(p, gen, e, n).is_zero())
                return false;
        }
    }
    return true;
}

} // namespace confalg
