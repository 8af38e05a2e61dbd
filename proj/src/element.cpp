#include "confalg/element.hpp"

#include <sstream>

namespace confalg {

Element Element::single(int gen, int dpow, Rat c)
{
    Element e;
    if (c != 0)
        e.terms_[{gen, dpow}] = std::move(c);
    return e;
}

Rat Element::coeff(int gen, int dpow) const
{
    auto it = terms_.find({gen, dpow});
    return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add(int gen, int dpow, const Rat& c)
{
    if (c == 0)
        return;
    DGen key{gen, dpow};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.gen, k.dpow, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.gen, k.dpow, -c);
    return *this;
}

Element Element::operator-() const
{
    Element r;
    for (const auto& [k, c] : terms_)
        r.terms_[k] = -c;
    return r;
}

Element Element::scaled(const Rat& c) const
{
    Element r;
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_[k] = v * c;
    return r;
}

int Element::max_dpow() const
{
    int m = 0;
    for (const auto& [k, c] : terms_)
        if (k.dpow > m)
            m = k.dpow;
    return m;
}

std::string Element::str(const std::vector<std::string>& gen_names) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << rat_to_string(c) << "*";
        if (k.dpow > 0)
            os << "D(" << k.dpow << ")";
        os << (k.gen < static_cast<int>(gen_names.size())
                   ? gen_names[k.gen]
                   : "g" + std::to_string(k.gen));
    }
    return os.str();
}

} // namespace confalg
