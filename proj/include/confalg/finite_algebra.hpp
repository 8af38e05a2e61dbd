#ifndef CONFALG_FINITE_ALGEBRA_HPP
#define CONFALG_FINITE_ALGEBRA_HPP

#include "confalg/checks.hpp"
#include "confalg/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confalg {

// A finite-dimensional algebra by structure constants e_i e_j = sum c(i,j,k) e_k,
// optionally with a symmetric invariant bilinear form.
struct FiniteAlgebra {
    AlgKind kind = AlgKind::Lie;
    std::vector<std::string> basis;
    // constants[i][j] = coefficient vector of e_i e_j
    std::vector<std::vector<Vec>> constants;
    std::optional<std::vector<Vec>> form; // symmetric matrix

    int dim() const { return static_cast<int>(basis.size()); }
    Vec product(const Vec& x, const Vec& y) const;
    Rat pair(const Vec& x, const Vec& y) const;

    // Defining identities for the declared kind, plus invariance of the
    // form when present.
    CheckReport validate() const;

    static FiniteAlgebra sl2();          // [e,f]=h, [h,e]=2e, [h,f]=-2f
    static FiniteAlgebra sl2_killing();  // sl2 with <e,f>=4, <h,h>=8
    static FiniteAlgebra mat2();         // 2x2 matrices, associative
    static FiniteAlgebra heis3();        // [x,y]=z, z central
    static FiniteAlgebra abelian(int k); // zero products
    static FiniteAlgebra gl2_commutator(); // mat2 with bracket ab-ba

    // Built-in lookup by name: "sl2", "mat2", "heis3", "abelian:k".
    static std::optional<FiniteAlgebra> named(const std::string& name);
};

} // namespace confalg

#endif
