#ifndef CONFALG_CONSTRUCTIONS_HPP
#define CONFALG_CONSTRUCTIONS_HPP

#include "confalg/finite_algebra.hpp"
#include "confalg/kdmodule.hpp"
#include "confalg/presentation.hpp"

#include <vector>

namespace confalg {

// Loop algebra of g: one free generator per basis element, pairwise
// locality 1, a(0)b = (ab), default weight 0.
Presentation loop_algebra(const FiniteAlgebra& g);

// Central extension of the loop algebra of a Lie algebra by an invariant
// form: a(0)b = [a,b], a(1)b = <a,b> c with c an order-1 torsion generator.
Presentation affinize(const FiniteAlgebra& g);

// The bracket products a[n]b = a(n)b - sum_s (-1)^{n+s} D^(s)( b(n+s)a ) on
// an associative presentation; locality max(N(a,b), N(b,a)).
Presentation commutator_algebra(const Presentation& p);

// Change of k[D]-basis: new generator i is sum_j m[i][j](D) applied to old
// generator j.  m must be invertible over k[D]; torsion columns only admit
// constant entries.
Presentation change_kd_basis(const Presentation& p, const PolyMatrix& m,
                             const std::vector<std::string>& new_names);

// Presentation of p modulo the two-sided ideal generated by the given
// elements.  d_bound caps the D-powers the closure may touch; exceeding it
// raises budget_error ("unbounded ideal").
Presentation quotient(const Presentation& p,
                      const std::vector<Element>& ideal_generators,
                      int d_bound);

} // namespace confalg

#endif
