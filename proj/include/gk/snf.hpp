#pragma once

#include <optional>

#include "gk/matrix.hpp"

namespace gk {

/// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ...
/// U_inv and V_inv are tracked so kernels and solves come for free.
struct SmithNormalForm {
    Mat U, D, V, U_inv, V_inv;
    int rank = 0;
    std::vector<RingElem> divisors() const;  // the nonzero diagonal, canonical
};

SmithNormalForm smith_normal_form(const Mat& A);
SmithNormalForm smith_normal_form(const LatticeMap& A);

/// Basis of {x : Ax = 0} as columns; a saturated direct summand over PIDs.
Mat kernel_basis(const Mat& A);
LatticeMap kernel_basis_map(const LatticeMap& A, const std::string& label_prefix = "k");

struct CokernelInvariants {
    int free_rank = 0;
    std::vector<RingElem> torsion;  // elementary divisors that are not units
    bool operator==(const CokernelInvariants&) const = default;
};

CokernelInvariants cokernel_invariants(const Mat& A);
CokernelInvariants cokernel_invariants(const LatticeMap& A);

/// X with A*X = B over the ring, or nullopt when no exact solution exists.
std::optional<Mat> solve_columns(const Mat& A, const Mat& B);

/// Exact determinant by Bareiss fraction-free elimination.
RingElem determinant(const Mat& A);

bool is_unimodular(const Mat& A);

}  // namespace gk
