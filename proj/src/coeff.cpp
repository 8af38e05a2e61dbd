#include "confalg/coeff.hpp"

#include <sstream>

namespace confalg {

void CoeffElement::add(const CoeffLetter& l, const Rat& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
        terms_.emplace(l, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o)
{
    for (const auto& [l, c] : o.terms_)
        add(l, c);
    return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o)
{
    for (const auto& [l, c] : o.terms_)
        add(l, -c);
    return *this;
}

CoeffElement CoeffElement::scaled(const Rat& c) const
{
    CoeffElement r;
    if (c == 0)
        return r;
    for (const auto& [l, v] : terms_)
        r.add(l, v * c);
    return r;
}

std::string CoeffElement::str(const std::vector<std::string>& gen_names) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << rat_to_string(c) << "*";
        os << gen_names.at(static_cast<std::size_t>(l.gen)) << "(" << l.index
           << ")";
    }
    return os.str();
}

CoeffElement element_coefficient(const Presentation& p, const Element& e,
                                 std::int64_t n)
{
    CoeffElement out;
    for (const auto& [k, c] : e.terms()) {
        bool torsion = p.generators.at(static_cast<std::size_t>(k.gen)).torsion_order != 0;
        if (torsion) {
            // k.dpow is 0 on valid elements; the letter lives at index -1
            if (n == -1)
                out.add({k.gen, -1}, c);
            continue;
        }
        Int b = binom(Int(n), static_cast<unsigned long>(k.dpow));
        if (b == 0)
            continue;
        out.add({k.gen, n - k.dpow}, c * Rat(sign_pow(k.dpow) * b));
    }
    return out;
}

CoeffElement coeff_bracket(const Presentation& p, const CoeffLetter& x,
                           const CoeffLetter& y)
{
    CoeffElement out;
    int nloc = p.locality_of(x.gen, y.gen);
    for (int s = 0; s < nloc; ++s) {
        const Element* sc = p.sc_entry(x.gen, y.gen, s);
        if (!sc)
            continue;
        Int b = binom(Int(x.index), static_cast<unsigned long>(s));
        if (b == 0)
            continue;
        CoeffElement part =
            element_coefficient(p, *sc, x.index + y.index - s);
        out += part.scaled(Rat(b));
    }
    return out;
}

CoeffElement coeff_bracket(const Presentation& p, const CoeffElement& x,
                           const CoeffElement& y)
{
    CoeffElement out;
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms())
            out += coeff_bracket(p, lx, ly).scaled(cx * cy);
    return out;
}

CheckReport coeff_basis_probe(const Presentation& p, IndexWindow window,
                              int dpow_max)
{
    CheckReport rep;
    rep.name = "coeff-basis-probe";
    rep.params = "window=[" + std::to_string(window.lo) + "," +
                 std::to_string(window.hi) + "] dpow_max=" +
                 std::to_string(dpow_max);
    auto names = p.gen_names();
    for (int g = 0; g < p.ngens(); ++g) {
        bool torsion = p.generators[static_cast<std::size_t>(g)].torsion_order != 0;
        int kmax = torsion ? 0 : dpow_max;
        for (int k = 0; k <= kmax; ++k) {
            Element a = Element::single(g, k, Rat(1));
            Element da = apply_derivation(p, a, 1);
            for (std::int64_t n = window.lo; n <= window.hi; ++n) {
                // (Da)(n) + n a(n-1) must reduce to zero identically
                CoeffElement r = element_coefficient(p, da, n);
                // Da = 1*D^(k+1..) in divided powers: D a = (k+1) D^(k+1) a
                // element_coefficient expects plain elements; apply_derivation
                // already returned the divided-powers form of D^(1) a = D a.
                CoeffElement shift = element_coefficient(p, a, n - 1);
                r += shift.scaled(Rat(static_cast<long>(n)));
                ++rep.checked;
                if (!r.is_zero()) {
                    std::ostringstream os;
                    os << "relation fails for D(" << k << ")" << names[static_cast<std::size_t>(g)]
                       << " at index " << n << ": " << r.str(names);
                    rep.record(os.str(), {}, {});
                }
            }
        }
    }
    return rep;
}

LocalityOrderResult series_locality_order(const Presentation& p, int a, int b,
                                          int trial_N, IndexWindow window)
{
    LocalityOrderResult res;
    if (a < 0 || a >= p.ngens() || b < 0 || b >= p.ngens())
        throw input_error("series_locality_order: unknown generator");

    // coefficient of the defining relation at (m, n) is polynomial in m, n
    // of degree at most (locality - 1) + max D-power in the table
    long degree_bound = std::max(0, p.locality_of(a, b) - 1) + p.max_sc_dpow();
    bool window_big_enough = (window.hi - window.lo) >= degree_bound;

    auto passes = [&](int N) {
        for (std::int64_t n = window.lo; n <= window.hi; ++n)
            for (std::int64_t m = window.lo; m <= window.hi; ++m) {
                CoeffElement acc;
                for (int s = 0; s <= N; ++s) {
                    Int bin = binom(static_cast<long>(N), static_cast<long>(s));
                    CoeffLetter la{a, n - s};
                    CoeffLetter lb{b, m + s};
                    acc += coeff_bracket(p, la, lb)
                               .scaled(Rat(sign_pow(s) * bin));
                }
                if (!acc.is_zero())
                    return false;
            }
        return true;
    };

    for (int N = 0; N <= trial_N; ++N) {
        if (passes(N)) {
            res.order = N;
            res.status = window_big_enough ? CertStatus::Certified
                                           : CertStatus::Inconclusive;
            if (!window_big_enough)
                res.note = "window smaller than the coefficient degree bound " +
                           std::to_string(degree_bound);
            return res;
        }
    }
    res.order = -1;
    res.status = CertStatus::Inconclusive;
    res.note = "no order up to " + std::to_string(trial_N) +
               " passes on the window";
    return res;
}

} // namespace confalg
