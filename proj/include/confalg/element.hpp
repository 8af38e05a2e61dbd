#ifndef CONFALG_ELEMENT_HPP
#define CONFALG_ELEMENT_HPP

#include "confalg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace confalg {

// A term key: divided power D^(dpow) applied to generator #gen.
struct DGen {
    int gen = 0;
    int dpow = 0;

    auto operator<=>(const DGen&) const = default;
};

// Finite k[D]-linear combination of generators in divided-powers form.
// Zero coefficients are never stored; keys are kept sorted by (gen, dpow).
class Element {
public:
    Element() = default;

    static Element generator(int gen) { return single(gen, 0, Rat(1)); }
    static Element single(int gen, int dpow, Rat c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const std::map<DGen, Rat>& terms() const { return terms_; }

    Rat coeff(int gen, int dpow) const;

    void add(int gen, int dpow, const Rat& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    Element scaled(const Rat& c) const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    int max_dpow() const;

    std::string str(const std::vector<std::string>& gen_names) const;

private:
    std::map<DGen, Rat> terms_;
};

} // namespace confalg

#endif
