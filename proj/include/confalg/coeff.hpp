#ifndef CONFALG_COEFF_HPP
#define CONFALG_COEFF_HPP

#include "confalg/checks.hpp"
#include "confalg/presentation.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace confalg {

// An indexed letter g(n), n in Z.  For a torsion generator c the only
// nonzero letter is c(-1); invalid letters reduce to zero at construction.
struct CoeffLetter {
    int gen = 0;
    std::int64_t index = 0;

    auto operator<=>(const CoeffLetter&) const = default;
};

// k-linear combination of reduced letters (the degree-1 slice of the
// coefficient algebra).
class CoeffElement {
public:
    CoeffElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<CoeffLetter, Rat>& terms() const { return terms_; }

    void add(const CoeffLetter& l, const Rat& c);
    CoeffElement& operator+=(const CoeffElement& o);
    CoeffElement& operator-=(const CoeffElement& o);
    CoeffElement scaled(const Rat& c) const;
    bool operator==(const CoeffElement& o) const { return terms_ == o.terms_; }

    std::string str(const std::vector<std::string>& gen_names) const;

private:
    std::map<CoeffLetter, Rat> terms_;
};

// The n-th coefficient of an element: D^(k)g contributes
// (-1)^k binom(n,k) g(n-k); torsion letters survive only at index -1.
CoeffElement element_coefficient(const Presentation& p, const Element& e,
                                 std::int64_t n);

// a(m) b(n) = sum_s binom(m,s) (a(s)b)(m+n-s) — the product of letters in
// the coefficient algebra (the bracket when p is a Lie presentation).
CoeffElement coeff_bracket(const Presentation& p, const CoeffLetter& x,
                           const CoeffLetter& y);

CoeffElement coeff_bracket(const Presentation& p, const CoeffElement& x,
                           const CoeffElement& y);

struct IndexWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

// Verifies on the window that the defining reduction (Da)(n) = -n a(n-1)
// never forces a relation among the basis letters.
CheckReport coeff_basis_probe(const Presentation& p, IndexWindow window,
                              int dpow_max = 3);

enum class CertStatus { Certified, Inconclusive };

struct LocalityOrderResult {
    int order = -1;  // least N passing on the window; -1 if none <= trial_N
    CertStatus status = CertStatus::Inconclusive;
    std::string note;
};

// Least N <= trial_N with sum_{s=0..N} (-1)^s binom(N,s) a(n-s)b(m+s) = 0
// for all m, n in the window.  Certified when the window out-sizes the
// polynomial degree of the coefficients in (m, n).
LocalityOrderResult series_locality_order(const Presentation& p, int a, int b,
                                          int trial_N, IndexWindow window);

} // namespace confalg

#endif
