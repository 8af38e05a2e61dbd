#ifndef CONFALG_DPOLY_HPP
#define CONFALG_DPOLY_HPP

#include "confalg/rational.hpp"

#include <vector>

namespace confalg {

// Dense univariate polynomial over Q in the derivation D.
class DPoly {
public:
    DPoly() = default;
    explicit DPoly(Rat c)
    {
        if (c != 0)
            coeffs_.push_back(std::move(c));
    }
    static DPoly monomial(std::size_t k, Rat c = Rat(1));

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : Rat(0);
    }
    const Rat& lead() const { return coeffs_.back(); }
    Rat constant_term() const { return coeff(0); }

    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);
    DPoly operator*(const DPoly& o) const;
    DPoly operator-() const;
    DPoly scaled(const Rat& c) const;

    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }

    bool operator==(const DPoly& o) const { return coeffs_ == o.coeffs_; }

    // quotient and remainder of *this by d (d nonzero)
    std::pair<DPoly, DPoly> divmod(const DPoly& d) const;

    std::string str() const; // human-readable, for diagnostics

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    void trim();

private:
    std::vector<Rat> coeffs_; // coeffs_[k] multiplies D^k
};

} // namespace confalg

#endif
