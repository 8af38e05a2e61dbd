#ifndef CONFALG_CHECKS_HPP
#define CONFALG_CHECKS_HPP

#include "confalg/presentation.hpp"

#include <string>
#include <vector>

namespace confalg {

struct Violation {
    std::string where; // inputs, human-readable
    Element lhs;
    Element rhs;
};

struct CheckReport {
    std::string name;
    std::string params;
    std::size_t checked = 0;
    std::vector<Violation> violations;
    std::size_t violation_count = 0; // total, even past the stored cap

    bool pass() const { return violation_count == 0; }
    void record(std::string where, Element lhs, Element rhs);

    static constexpr std::size_t kStoredCap = 64;
};

// Structural validation: locality domain symmetry, table indices in range,
// torsion generators annihilating on both sides, torsion terms with positive
// D-power, and (optionally) weight homogeneity of every table entry.
CheckReport validate_presentation(const Presentation& p,
                                  bool check_grading = false);

// (a(m)b)(n)c = sum_s (-1)^s binom(m,s) a(m-s)(b(n+s)c)
CheckReport check_conformal_associativity(const Presentation& p, int m_max,
                                          int n_max, int threads = 1);

// (a[m]b)[n]c = sum_s (-1)^s binom(m,s) ( a[m-s](b[n+s]c) - b[n+s](a[m-s]c) )
CheckReport check_conformal_jacobi(const Presentation& p, int m_max, int n_max,
                                   int threads = 1);

// a(n)b = sign * sum_s (-1)^{s+n} D^(s)( b(n+s)a )
CheckReport check_quasi_symmetry(const Presentation& p, int sign, int n_max,
                                 int threads = 1);

} // namespace confalg

#endif
