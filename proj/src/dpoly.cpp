#include "confalg/dpoly.hpp"

#include <sstream>

namespace confalg {

DPoly DPoly::monomial(std::size_t k, Rat c)
{
    DPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rat(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void DPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

DPoly& DPoly::operator+=(const DPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

DPoly DPoly::operator*(const DPoly& o) const
{
    if (is_zero() || o.is_zero())
        return DPoly();
    DPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

DPoly DPoly::operator-() const
{
    DPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

DPoly DPoly::scaled(const Rat& c) const
{
    if (c == 0)
        return DPoly();
    DPoly r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

std::pair<DPoly, DPoly> DPoly::divmod(const DPoly& d) const
{
    DPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
        Rat c = r.lead() / d.lead();
        DPoly t = DPoly::monomial(k, c);
        q += t;
        r -= t * d;
    }
    return {q, r};
}

std::string DPoly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << rat_to_string(coeffs_[k]);
        if (k > 0)
            os << "*D^" << k;
    }
    return os.str();
}

} // namespace confalg
