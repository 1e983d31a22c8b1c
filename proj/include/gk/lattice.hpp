#pragma once

#include "gk/snf.hpp"

namespace gk {

/// Canonical column Hermite form of the R-span of the columns of A
/// (zero columns dropped).  Two matrices span the same column lattice
/// iff their forms coincide.
Mat column_hermite(const Mat& A);

/// A finitely generated coeff-submodule of ambient^dim, kept in canonical
/// Hermite basis form.  coeff == ambient for all four rings; additionally
/// coeff = ZZ inside ambient = QQ is supported (integral forms of rational
/// modules), handled by clearing denominators.
class Lattice {
  public:
    Lattice() = default;

    static Lattice span(const BaseRing& coeff, const BaseRing& ambient, const Mat& cols);
    static Lattice span(const BaseRing& R, const Mat& cols) { return span(R, R, cols); }
    static Lattice zero(const BaseRing& coeff, const BaseRing& ambient, int dim);
    static Lattice full(const BaseRing& coeff, const BaseRing& ambient, int dim);

    const Mat& basis() const { return basis_; }
    int dim() const { return dim_; }
    int rank() const { return basis_.cols(); }
    const BaseRing& coeff() const { return coeff_; }
    const BaseRing& ambient() const { return ambient_; }

    bool contains_vec(const Mat& v) const;  // dim x 1 column
    bool contains(const Lattice& other) const;
    bool operator==(const Lattice& o) const;
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    Lattice sum(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;

    /// Coordinates of the columns of V in this basis, if all lie inside.
    std::optional<Mat> coords_of(const Mat& V) const;

    /// Lattice scaled by a nonzero ring element.
    Lattice scaled(const RingElem& c) const;

    bool is_saturated_in_ambient() const;  // coeff == ambient PIDs only

  private:
    BaseRing coeff_, ambient_;
    int dim_ = 0;
    Mat basis_;  // dim x rank, canonical
};

/// {v in L : ops[i] * v in targets[i] for every i}.  Each ops[i] maps
/// ambient^dim(L) to ambient^{dim(targets[i])}; entries may involve
/// denominators cleared internally.
Lattice constrained_sublattice(const Lattice& L, const std::vector<Mat>& ops,
                               const std::vector<Lattice>& targets);

/// Elementary divisors of sub inside super (sub must be contained in super).
std::vector<RingElem> relative_divisors(const Lattice& sub, const Lattice& super);

}  // namespace gk
