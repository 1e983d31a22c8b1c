#pragma once

#include <array>
#include <optional>

#include "gk/matrix.hpp"

namespace gk {

/// Lie algebra of finite rank given by structure constants
/// [x_i, x_j] = sum_k c[i][j][k] x_k over the base ring.
struct LieAlgebraData {
    BaseRing ring;
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<RingElem>>> c;  // dense n x n x n

    LieAlgebraData() = default;
    LieAlgebraData(BaseRing R, std::vector<std::string> labels);

    int rank() const { return static_cast<int>(basis.size()); }
    void set_bracket(int i, int j, const std::vector<RingElem>& v);  // also fills (j,i)
    const std::vector<RingElem>& bracket(int i, int j) const { return c[i][j]; }
    std::vector<RingElem> bracket_vec(const std::vector<RingElem>& x,
                                      const std::vector<RingElem>& y) const;
    Mat ad(int i) const;  // matrix of [x_i, -]
    int index_of(const std::string& label) const;
};

struct LieValidationReport {
    bool ok = true;
    std::string message;
    std::optional<std::array<int, 3>> triple;  // first violating (i,j,k) if any
};

/// Alternating + antisymmetry + Jacobi, checked exactly on all basis triples.
LieValidationReport validate_lie(const LieAlgebraData& L);

LieAlgebraData reorder_basis(const LieAlgebraData& L, const std::vector<int>& perm);

/// Splitting of the parent basis index set into a subalgebra and a
/// complementary subalgebra; both parts must be bracket-closed.
struct SubalgebraDecomposition {
    std::vector<int> sub_idx;         // spans q
    std::vector<int> complement_idx;  // spans u-bar

    static SubalgebraDecomposition make(const LieAlgebraData& parent, std::vector<int> sub,
                                        std::vector<int> complement);
};

LieAlgebraData restrict_to_indices(const LieAlgebraData& L, const std::vector<int>& idx,
                                   const std::string& err_context);

}  // namespace gk
