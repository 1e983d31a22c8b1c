#pragma once

#include <string>
#include <vector>

#include "gk/ring.hpp"

namespace gk {

/// Dense matrix over a base ring.  Desk-scale ranks; correctness over speed.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(BaseRing R, int rows, int cols)
        : ring_(std::move(R)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw error("Mat: negative dimension");
    }

    static Mat identity(const BaseRing& R, int n);
    static Mat zero(const BaseRing& R, int rows, int cols) { return Mat(R, rows, cols); }

    const BaseRing& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RingElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const RingElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const RingElem& c) const;
    Mat transpose() const;

    Mat col(int j) const;
    std::vector<RingElem> col_vec(int j) const;
    void set_col(int j, const std::vector<RingElem>& v);

    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);
    static Mat from_cols(const BaseRing& R, int dim, const std::vector<std::vector<RingElem>>& cols);

    /// kron(M, N)[(i,j),(k,l)] = M[i][k] * N[j][l], flat index (i,j) = i*N.rows + j.
    static Mat kron(const Mat& a, const Mat& b);

    Mat with_ring(const BaseRing& R) const;   // retag; entries must lie in R
    std::string to_text() const;

  private:
    BaseRing ring_;
    int rows_, cols_;
    std::vector<RingElem> a_;
};

Mat mul_vec_as_col(const Mat& A, const std::vector<RingElem>& v);

/// Free module of finite rank with a labeled basis.
struct LatticeModule {
    BaseRing ring;
    std::vector<std::string> labels;

    LatticeModule() = default;
    LatticeModule(BaseRing R, std::vector<std::string> ls);
    int rank() const { return static_cast<int>(labels.size()); }
    bool operator==(const LatticeModule&) const = default;
};

/// Homomorphism of free modules, as an exact target.rank x source.rank matrix.
struct LatticeMap {
    LatticeModule source, target;
    Mat matrix;

    LatticeMap() = default;
    LatticeMap(LatticeModule src, LatticeModule tgt, Mat m);
    static LatticeMap identity(const LatticeModule& M);
    LatticeMap compose(const LatticeMap& inner) const;  // this . inner
};

Mat apply_ring_map(const RingMap& f, const Mat& A);
LatticeMap apply_ring_map(const RingMap& f, const LatticeMap& A);

}  // namespace gk
