#ifndef CONFALG_KDMODULE_HPP
#define CONFALG_KDMODULE_HPP

#include "confalg/dpoly.hpp"
#include "confalg/linalg.hpp"

#include <vector>

namespace confalg {

using PolyVec = std::vector<DPoly>;
using PolyMatrix = std::vector<PolyVec>;

// Smith-style diagonalization of a matrix over Q[D].  Only the column
// transform V (and its inverse) is tracked: row operations do not change
// the induced coordinate change v -> v*V on the ambient module.
struct SmithResult {
    std::vector<DPoly> diag; // diagonal entries, one per pivot position
    PolyMatrix V;            // N x N
    PolyMatrix Vinv;         // N x N
    std::size_t ncols = 0;
};

SmithResult smith_normal_form(PolyMatrix a, std::size_t ncols);

PolyVec mul_row_matrix(const PolyVec& v, const PolyMatrix& m);

// Vectors in a module  k[D]^F  (+)  k^T  where D kills the scalar block.
struct MixedVec {
    PolyVec free_part;
    Vec scalar_part;

    bool is_zero() const;
};

// Triangular k[D]-generating set of the row span: rows with a nonzero
// polynomial part are k[D]-free generators, rows supported on the scalar
// block alone are order-1 torsion generators.
struct SubmoduleBasis {
    std::vector<MixedVec> free_rows;
    std::vector<MixedVec> torsion_rows;
};

SubmoduleBasis kd_submodule_basis(std::vector<MixedVec> rows);

} // namespace confalg

#endif
