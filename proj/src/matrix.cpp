#include "gk/matrix.hpp"

#include <set>
#include <sstream>

namespace gk {

Mat Mat::identity(const BaseRing& R, int n) {
    Mat m(R, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RingElem(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat+: shape mismatch");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat-: shape mismatch");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Mat Mat::scaled(const RingElem& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw error("Mat*: shape mismatch");
    Mat r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RingElem& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::col(int j) const {
    Mat r(ring_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

std::vector<RingElem> Mat::col_vec(int j) const {
    std::vector<RingElem> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(int j, const std::vector<RingElem>& v) {
    if (static_cast<int>(v.size()) != rows_) throw error("set_col: size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw error("hcat: row mismatch");
    Mat r(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw error("vcat: col mismatch");
    Mat r(a.ring_, a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
        for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
    }
    return r;
}

Mat Mat::from_cols(const BaseRing& R, int dim, const std::vector<std::vector<RingElem>>& cols) {
    Mat r(R, dim, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != dim) throw error("from_cols: size mismatch");
        for (int i = 0; i < dim; ++i) r.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    Mat r(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.rows_; ++j)
                for (int l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + j, k * b.cols_ + l) = a.at(i, k) * b.at(j, l);
        }
    return r;
}

Mat Mat::with_ring(const BaseRing& R) const {
    Mat r(R, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (!in_ring(R, at(i, j)))
                throw error("with_ring: entry " + to_string(at(i, j)) + " not in " + R.name());
            r.at(i, j) = at(i, j);
        }
    return r;
}

std::string Mat::to_text() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << to_string(at(i, j));
        }
        os << "]";
        if (i + 1 < rows_) os << ", ";
    }
    os << "]";
    return os.str();
}

Mat mul_vec_as_col(const Mat& A, const std::vector<RingElem>& v) {
    if (static_cast<int>(v.size()) != A.cols()) throw error("mul_vec_as_col: size mismatch");
    Mat r(A.ring(), A.rows(), 1);
    for (int i = 0; i < A.rows(); ++i) {
        RingElem s;
        for (int j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero()) s += A.at(i, j) * v[j];
        r.at(i, 0) = s;
    }
    return r;
}

LatticeModule::LatticeModule(BaseRing R, std::vector<std::string> ls)
    : ring(std::move(R)), labels(std::move(ls)) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw error("LatticeModule: duplicate basis label " + l);
}

LatticeMap::LatticeMap(LatticeModule src, LatticeModule tgt, Mat m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
        throw error("LatticeMap: matrix shape does not match source/target ranks");
    if (!(source.ring == target.ring)) throw error("LatticeMap: mixed rings");
    for (int i = 0; i < matrix.rows(); ++i)
        for (int j = 0; j < matrix.cols(); ++j)
            if (!in_ring(source.ring, matrix.at(i, j)))
                throw error("LatticeMap: entry outside " + source.ring.name());
}

LatticeMap LatticeMap::identity(const LatticeModule& M) {
    return LatticeMap(M, M, Mat::identity(M.ring, M.rank()));
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
    if (!(inner.target == source)) throw error("compose: middle modules differ");
    return LatticeMap(inner.source, target, matrix * inner.matrix);
}

Mat apply_ring_map(const RingMap& f, const Mat& A) {
    Mat r(f.target, A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) r.at(i, j) = f.apply(A.at(i, j));
    return r;
}

LatticeMap apply_ring_map(const RingMap& f, const LatticeMap& A) {
    return LatticeMap(LatticeModule(f.target, A.source.labels),
                      LatticeModule(f.target, A.target.labels), apply_ring_map(f, A.matrix));
}

}  // namespace gk
