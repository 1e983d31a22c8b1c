#include "gk/lattice.hpp"

namespace gk {

namespace {

mpz_class den_lcm_of(const Mat& A) {
    mpz_class d(1);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            const RingElem& x = A.at(i, j);
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), x.re.get_den().get_mpz_t());
            d = l;
            mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), x.im.get_den().get_mpz_t());
            d = l;
        }
    return d;
}

// Scale into the coefficient ring and retag.  Only needed when coeff != ambient.
Mat clear_denominators(const Mat& A, const BaseRing& coeff, mpz_class* scale_out) {
    mpz_class d = den_lcm_of(A);
    if (scale_out) *scale_out = d;
    Mat r(coeff, A.rows(), A.cols());
    RingElem c{mpq_class(d)};
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            RingElem v = A.at(i, j) * c;
            if (!in_ring(coeff, v))
                throw error("lattice: entry " + to_string(A.at(i, j)) + " has no integral model");
            r.at(i, j) = v;
        }
    return r;
}

}  // namespace

namespace {

// g = p*a + q*b with g the canonical gcd associate (local copy; see snf.cpp).
void gcd_bezout(const BaseRing& R, const RingElem& a, const RingElem& b, RingElem& g,
                RingElem& p, RingElem& q) {
    RingElem old_r = a, r = b;
    RingElem old_p{1}, pp{0}, old_q{0}, qq{1};
    while (!r.is_zero()) {
        auto [quo, rem] = divmod(R, old_r, r);
        old_r = r;
        r = rem;
        RingElem np = old_p - quo * pp;
        old_p = pp;
        pp = np;
        RingElem nq = old_q - quo * qq;
        old_q = qq;
        qq = nq;
    }
    g = canonical_associate(R, old_r);
    RingElem u = *exact_div(R, g, old_r);
    p = u * old_p;
    q = u * old_q;
}

}  // namespace

Mat column_hermite(const Mat& A) {
    const BaseRing& R = A.ring();
    Mat h = A;
    int dim = h.rows(), k = h.cols();
    int r = 0;
    for (int i = 0; i < dim && r < k; ++i) {
        int jmin = -1;
        mpz_class best;
        for (int j = r; j < k; ++j) {
            if (h.at(i, j).is_zero()) continue;
            mpz_class s = euclid_size(R, h.at(i, j));
            if (jmin < 0 || s < best) {
                best = s;
                jmin = j;
            }
        }
        if (jmin < 0) continue;
        if (jmin != r)
            for (int t = 0; t < dim; ++t) std::swap(h.at(t, r), h.at(t, jmin));
        for (int j = r + 1; j < k; ++j) {
            if (h.at(i, j).is_zero()) continue;
            RingElem a = h.at(i, r), b = h.at(i, j);
            if (auto quo = exact_div(R, b, a)) {
                for (int t = 0; t < dim; ++t) h.at(t, j) -= *quo * h.at(t, r);
                continue;
            }
            RingElem g, p, q;
            gcd_bezout(R, a, b, g, p, q);
            RingElem u = *exact_div(R, a, g), v = *exact_div(R, b, g);
            for (int t = 0; t < dim; ++t) {
                RingElem x = h.at(t, r), y = h.at(t, j);
                h.at(t, r) = p * x + q * y;
                h.at(t, j) = u * y - v * x;
            }
        }
        // normalize the pivot, then reduce earlier columns at this row
        RingElem canon = canonical_associate(R, h.at(i, r));
        RingElem u = *exact_div(R, canon, h.at(i, r));
        for (int t = 0; t < dim; ++t) h.at(t, r) = u * h.at(t, r);
        for (int j = 0; j < r; ++j) {
            if (h.at(i, j).is_zero()) continue;
            RingElem res = reduce_mod(R, h.at(i, j), h.at(i, r));
            RingElem q = *exact_div(R, h.at(i, j) - res, h.at(i, r));
            for (int t = 0; t < dim; ++t) h.at(t, j) -= q * h.at(t, r);
        }
        ++r;
    }
    Mat out(R, dim, r);
    for (int j = 0; j < r; ++j)
        for (int t = 0; t < dim; ++t) out.at(t, j) = h.at(t, j);
    return out;
}

Lattice Lattice::span(const BaseRing& coeff, const BaseRing& ambient, const Mat& cols) {
    bool mixed = !(coeff == ambient);
    if (mixed &&
        !(coeff.kind == RingKind::Integers && ambient.kind == RingKind::Rationals))
        throw error("lattice: unsupported coefficient/ambient ring combination");
    for (int i = 0; i < cols.rows(); ++i)
        for (int j = 0; j < cols.cols(); ++j)
            if (!in_ring(ambient, cols.at(i, j)))
                throw error("lattice: generator entry outside " + ambient.name());
    Lattice L;
    L.coeff_ = coeff;
    L.ambient_ = ambient;
    L.dim_ = cols.rows();
    if (!mixed) {
        L.basis_ = column_hermite(cols.with_ring(coeff));
    } else {
        mpz_class d;
        Mat scaled = clear_denominators(cols, coeff, &d);
        Mat h = column_hermite(scaled);
        Mat unscaled(ambient, h.rows(), h.cols());
        RingElem dd{mpq_class(d)};
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < h.cols(); ++j)
                unscaled.at(i, j) = RingElem(h.at(i, j).re / dd.re);
        L.basis_ = unscaled;
    }
    return L;
}

Lattice Lattice::zero(const BaseRing& coeff, const BaseRing& ambient, int dim) {
    return span(coeff, ambient, Mat(ambient, dim, 0));
}

Lattice Lattice::full(const BaseRing& coeff, const BaseRing& ambient, int dim) {
    return span(coeff, ambient, Mat::identity(ambient, dim));
}

std::optional<Mat> Lattice::coords_of(const Mat& V) const {
    if (V.rows() != dim_) throw error("coords_of: dimension mismatch");
    bool mixed = !(coeff_ == ambient_);
    if (!mixed) return solve_columns(basis_.with_ring(coeff_), V.with_ring(coeff_));
    Mat both = Mat::hcat(basis_, V);
    mpz_class d;
    Mat scaled = clear_denominators(both, coeff_, &d);
    Mat B(coeff_, dim_, basis_.cols()), W(coeff_, dim_, V.cols());
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < basis_.cols(); ++j) B.at(i, j) = scaled.at(i, j);
        for (int j = 0; j < V.cols(); ++j) W.at(i, j) = scaled.at(i, basis_.cols() + j);
    }
    return solve_columns(B, W);
}

bool Lattice::contains_vec(const Mat& v) const { return coords_of(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    if (other.rank() == 0) return true;
    return coords_of(other.basis_).has_value();
}

bool Lattice::operator==(const Lattice& o) const {
    if (dim_ != o.dim_ || !(coeff_ == o.coeff_) || !(ambient_ == o.ambient_)) return false;
    if (basis_.cols() != o.basis_.cols()) return false;
    if (coeff_ == ambient_) return basis_ == o.basis_;
    // mixed case: compare at a common denominator
    Mat both = Mat::hcat(basis_, o.basis_);
    mpz_class d;
    Mat scaled = clear_denominators(both, coeff_, &d);
    Mat B1(coeff_, dim_, basis_.cols()), B2(coeff_, dim_, o.basis_.cols());
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < basis_.cols(); ++j) B1.at(i, j) = scaled.at(i, j);
        for (int j = 0; j < o.basis_.cols(); ++j) B2.at(i, j) = scaled.at(i, basis_.cols() + j);
    }
    return column_hermite(B1) == column_hermite(B2);
}

Lattice Lattice::sum(const Lattice& o) const {
    if (dim_ != o.dim_) throw error("lattice sum: dimension mismatch");
    return span(coeff_, ambient_, Mat::hcat(basis_, o.basis_));
}

Lattice Lattice::intersect(const Lattice& o) const {
    if (dim_ != o.dim_) throw error("lattice intersect: dimension mismatch");
    if (rank() == 0 || o.rank() == 0) return zero(coeff_, ambient_, dim_);
    Mat stacked = Mat::hcat(basis_, -o.basis_);
    bool mixed = !(coeff_ == ambient_);
    Mat K;
    if (!mixed) {
        K = kernel_basis(stacked.with_ring(coeff_));
    } else {
        mpz_class d;
        K = kernel_basis(clear_denominators(stacked, coeff_, &d));
    }
    // v = B1 * (first block of kernel columns)
    Mat top(basis_.ring(), basis_.cols(), K.cols());
    for (int i = 0; i < basis_.cols(); ++i)
        for (int j = 0; j < K.cols(); ++j) top.at(i, j) = K.at(i, j);
    return span(coeff_, ambient_, basis_ * top);
}

Lattice Lattice::scaled(const RingElem& c) const {
    if (c.is_zero()) throw error("lattice scaled by zero");
    return span(coeff_, ambient_, basis_.scaled(c));
}

bool Lattice::is_saturated_in_ambient() const {
    if (!(coeff_ == ambient_)) throw error("saturation flag needs coeff == ambient");
    for (const RingElem& d : smith_normal_form(basis_).divisors())
        if (!is_unit(coeff_, d)) return false;
    return true;
}

Lattice constrained_sublattice(const Lattice& L, const std::vector<Mat>& ops,
                               const std::vector<Lattice>& targets) {
    if (ops.size() != targets.size()) throw error("constrained_sublattice: arity mismatch");
    if (ops.empty()) return L;
    const BaseRing& coeff = L.coeff();
    const BaseRing& ambient = L.ambient();
    int nvars = L.rank();
    for (const auto& T : targets) nvars += T.rank();

    int nrows = 0;
    for (const auto& op : ops) nrows += op.rows();

    Mat sys(ambient, nrows, nvars);
    int row0 = 0, bcol = L.rank();
    for (size_t k = 0; k < ops.size(); ++k) {
        Mat lhs = ops[k] * L.basis();  // dim_k x rank(L)
        if (lhs.rows() != targets[k].dim())
            throw error("constrained_sublattice: operator/target dimension mismatch");
        for (int i = 0; i < lhs.rows(); ++i)
            for (int j = 0; j < lhs.cols(); ++j) sys.at(row0 + i, j) = lhs.at(i, j);
        const Mat& tb = targets[k].basis();
        for (int i = 0; i < tb.rows(); ++i)
            for (int j = 0; j < tb.cols(); ++j) sys.at(row0 + i, bcol + j) = -tb.at(i, j);
        row0 += lhs.rows();
        bcol += targets[k].rank();
    }

    Mat K;
    if (coeff == ambient) {
        K = kernel_basis(sys.with_ring(coeff));
    } else {
        mpz_class d;
        K = kernel_basis(clear_denominators(sys, coeff, &d));
    }
    Mat acoords(L.basis().ring(), L.rank(), K.cols());
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < K.cols(); ++j) acoords.at(i, j) = K.at(i, j);
    return Lattice::span(coeff, ambient, L.basis() * acoords);
}

std::vector<RingElem> relative_divisors(const Lattice& sub, const Lattice& super) {
    auto X = super.coords_of(sub.basis());
    if (!X) throw error("relative_divisors: not a sublattice");
    Mat Xc = X->with_ring(sub.coeff());
    return smith_normal_form(Xc).divisors();
}

}  // namespace gk
