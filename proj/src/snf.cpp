#include "gk/snf.hpp"

namespace gk {

namespace {

// g = p*a + q*b with g the canonical gcd associate.
struct GcdExt {
    RingElem g, p, q;
};

GcdExt gcdext(const BaseRing& R, const RingElem& a, const RingElem& b) {
    RingElem old_r = a, r = b;
    RingElem old_p{1}, p{0}, old_q{0}, q{1};
    while (!r.is_zero()) {
        auto [quo, rem] = divmod(R, old_r, r);
        old_r = r;
        r = rem;
        RingElem np = old_p - quo * p;
        old_p = p;
        p = np;
        RingElem nq = old_q - quo * q;
        old_q = q;
        q = nq;
    }
    RingElem canon = canonical_associate(R, old_r);
    if (old_r.is_zero()) return {RingElem(0), RingElem(1), RingElem(0)};
    RingElem u = *exact_div(R, canon, old_r);
    return {canon, u * old_p, u * old_q};
}

// Maintains A_orig = U * D * V together with the inverses of U and V.
struct Reducer {
    BaseRing R;
    Mat D, U, Uinv, V, Vinv;

    explicit Reducer(const Mat& A)
        : R(A.ring()),
          D(A),
          U(Mat::identity(A.ring(), A.rows())),
          Uinv(Mat::identity(A.ring(), A.rows())),
          V(Mat::identity(A.ring(), A.cols())),
          Vinv(Mat::identity(A.ring(), A.cols())) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < D.cols(); ++k) std::swap(D.at(i, k), D.at(j, k));
        for (int k = 0; k < U.rows(); ++k) std::swap(U.at(k, i), U.at(k, j));
        for (int k = 0; k < Uinv.cols(); ++k) std::swap(Uinv.at(i, k), Uinv.at(j, k));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < D.rows(); ++k) std::swap(D.at(k, i), D.at(k, j));
        for (int k = 0; k < V.cols(); ++k) std::swap(V.at(i, k), V.at(j, k));
        for (int k = 0; k < Vinv.rows(); ++k) std::swap(Vinv.at(k, i), Vinv.at(k, j));
    }
    // row_i += c * row_j
    void row_axpy(int i, int j, const RingElem& c) {
        if (c.is_zero()) return;
        for (int k = 0; k < D.cols(); ++k) D.at(i, k) += c * D.at(j, k);
        for (int k = 0; k < Uinv.cols(); ++k) Uinv.at(i, k) += c * Uinv.at(j, k);
        for (int k = 0; k < U.rows(); ++k) U.at(k, j) -= c * U.at(k, i);
    }
    // col_i += c * col_j
    void col_axpy(int i, int j, const RingElem& c) {
        if (c.is_zero()) return;
        for (int k = 0; k < D.rows(); ++k) D.at(k, i) += c * D.at(k, j);
        for (int k = 0; k < Vinv.rows(); ++k) Vinv.at(k, i) += c * Vinv.at(k, j);
        for (int k = 0; k < V.cols(); ++k) V.at(j, k) -= c * V.at(i, k);
    }
    void row_scale(int i, const RingElem& u) {
        RingElem uinv = ring_inv(R, u);
        for (int k = 0; k < D.cols(); ++k) D.at(i, k) = u * D.at(i, k);
        for (int k = 0; k < Uinv.cols(); ++k) Uinv.at(i, k) = u * Uinv.at(i, k);
        for (int k = 0; k < U.rows(); ++k) U.at(k, i) = U.at(k, i) * uinv;
    }

    // One Bezout transform clearing D[i][t] against the pivot D[t][t]:
    // [row_t; row_i] <- [[p, q], [-b/g, a/g]] [row_t; row_i].
    void row_gcd_step(int t, int i) {
        RingElem a = D.at(t, t), b = D.at(i, t);
        if (b.is_zero()) return;
        if (auto q = exact_div(R, b, a)) {
            row_axpy(i, t, -*q);
            return;
        }
        auto e = gcdext(R, a, b);
        RingElem u = *exact_div(R, a, e.g), v = *exact_div(R, b, e.g);
        apply_two_rows(t, i, e.p, e.q, -v, u);
    }
    void col_gcd_step(int t, int j) {
        RingElem a = D.at(t, t), b = D.at(t, j);
        if (b.is_zero()) return;
        if (auto q = exact_div(R, b, a)) {
            col_axpy(j, t, -*q);
            return;
        }
        auto e = gcdext(R, a, b);
        RingElem u = *exact_div(R, a, e.g), v = *exact_div(R, b, e.g);
        apply_two_cols(t, j, e.p, e.q, -v, u);
    }

  private:
    // rows (t,i) <- [[a11,a12],[a21,a22]] rows; inverse is [[a22,-a12],[-a21,a11]] (det 1)
    void apply_two_rows(int t, int i, const RingElem& a11, const RingElem& a12,
                        const RingElem& a21, const RingElem& a22) {
        for (int k = 0; k < D.cols(); ++k) {
            RingElem x = D.at(t, k), y = D.at(i, k);
            D.at(t, k) = a11 * x + a12 * y;
            D.at(i, k) = a21 * x + a22 * y;
        }
        for (int k = 0; k < Uinv.cols(); ++k) {
            RingElem x = Uinv.at(t, k), y = Uinv.at(i, k);
            Uinv.at(t, k) = a11 * x + a12 * y;
            Uinv.at(i, k) = a21 * x + a22 * y;
        }
        for (int k = 0; k < U.rows(); ++k) {
            RingElem x = U.at(k, t), y = U.at(k, i);
            U.at(k, t) = x * a22 - y * a21;
            U.at(k, i) = -x * a12 + y * a11;
        }
    }
    void apply_two_cols(int t, int j, const RingElem& a11, const RingElem& a12,
                        const RingElem& a21, const RingElem& a22) {
        // cols (t,j) <- (a11 col_t + a12 col_j, a21 col_t + a22 col_j)
        for (int k = 0; k < D.rows(); ++k) {
            RingElem x = D.at(k, t), y = D.at(k, j);
            D.at(k, t) = a11 * x + a12 * y;
            D.at(k, j) = a21 * x + a22 * y;
        }
        for (int k = 0; k < Vinv.rows(); ++k) {
            RingElem x = Vinv.at(k, t), y = Vinv.at(k, j);
            Vinv.at(k, t) = a11 * x + a12 * y;
            Vinv.at(k, j) = a21 * x + a22 * y;
        }
        for (int k = 0; k < V.cols(); ++k) {
            RingElem x = V.at(t, k), y = V.at(j, k);
            V.at(t, k) = x * a22 - y * a21;
            V.at(j, k) = -x * a12 + y * a11;
        }
    }
};

}  // namespace

std::vector<RingElem> SmithNormalForm::divisors() const {
    std::vector<RingElem> ds;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
        if (!D.at(i, i).is_zero()) ds.push_back(D.at(i, i));
    return ds;
}

SmithNormalForm smith_normal_form(const Mat& A) {
    const BaseRing& R = A.ring();
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!in_ring(R, A.at(i, j)))
                throw error("smith_normal_form: entry outside " + R.name());

    Reducer W(A);
    int m = A.rows(), n = A.cols();
    int t = 0;
    while (t < m && t < n) {
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (W.D.at(i, j).is_zero()) continue;
                mpz_class s = euclid_size(R, W.D.at(i, j));
                if (pi < 0 || s < best) {
                    best = s;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        W.row_swap(t, pi);
        W.col_swap(t, pj);

        for (;;) {
            for (int i = t + 1; i < m; ++i) W.row_gcd_step(t, i);
            bool col_dirty = false;
            for (int j = t + 1; j < n; ++j) {
                if (W.D.at(t, j).is_zero()) continue;
                W.col_gcd_step(t, j);
                col_dirty = true;
            }
            if (col_dirty) {
                bool col_clean = true;
                for (int i = t + 1; i < m; ++i)
                    if (!W.D.at(i, t).is_zero()) col_clean = false;
                if (!col_clean) continue;  // column ops reintroduced entries below the pivot
            }
            // divisibility of the trailing block by the pivot
            bool fixed = true;
            for (int i = t + 1; i < m && fixed; ++i)
                for (int j = t + 1; j < n && fixed; ++j) {
                    if (W.D.at(i, j).is_zero()) continue;
                    if (!exact_div(R, W.D.at(i, j), W.D.at(t, t))) {
                        W.row_axpy(t, i, RingElem(1));
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
        RingElem piv = W.D.at(t, t);
        RingElem canon = canonical_associate(R, piv);
        W.row_scale(t, *exact_div(R, canon, piv));
        ++t;
    }

    SmithNormalForm out;
    out.U = std::move(W.U);
    out.D = std::move(W.D);
    out.V = std::move(W.V);
    out.U_inv = std::move(W.Uinv);
    out.V_inv = std::move(W.Vinv);
    out.rank = t;
    return out;
}

SmithNormalForm smith_normal_form(const LatticeMap& A) { return smith_normal_form(A.matrix); }

Mat kernel_basis(const Mat& A) {
    SmithNormalForm s = smith_normal_form(A);
    int n = A.cols();
    Mat K(A.ring(), n, n - s.rank);
    for (int j = s.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) K.at(i, j - s.rank) = s.V_inv.at(i, j);
    return K;
}

LatticeMap kernel_basis_map(const LatticeMap& A, const std::string& label_prefix) {
    Mat K = kernel_basis(A.matrix);
    std::vector<std::string> labels;
    for (int j = 0; j < K.cols(); ++j) labels.push_back(label_prefix + std::to_string(j));
    return LatticeMap(LatticeModule(A.source.ring, labels), A.source, K);
}

CokernelInvariants cokernel_invariants(const Mat& A) {
    SmithNormalForm s = smith_normal_form(A);
    CokernelInvariants out;
    out.free_rank = A.rows() - s.rank;
    for (const RingElem& d : s.divisors())
        if (!is_unit(A.ring(), d)) out.torsion.push_back(d);
    return out;
}

CokernelInvariants cokernel_invariants(const LatticeMap& A) { return cokernel_invariants(A.matrix); }

std::optional<Mat> solve_columns(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw error("solve_columns: row mismatch");
    const BaseRing& R = A.ring();
    SmithNormalForm s = smith_normal_form(A);
    Mat C = s.U_inv * B;
    Mat Y(R, A.cols(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        for (int i = 0; i < s.rank; ++i) {
            auto q = exact_div(R, C.at(i, j), s.D.at(i, i));
            if (!q) return std::nullopt;
            Y.at(i, j) = *q;
        }
        for (int i = s.rank; i < A.rows(); ++i)
            if (!C.at(i, j).is_zero()) return std::nullopt;
    }
    return s.V_inv * Y;
}

RingElem determinant(const Mat& A) {
    if (A.rows() != A.cols()) throw error("determinant: not square");
    const BaseRing& R = A.ring();
    int n = A.rows();
    if (n == 0) return RingElem(1);
    // Bareiss fraction-free elimination: every division below is exact.
    Mat w = A;
    RingElem prev(1);
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return RingElem(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                RingElem num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                auto q = exact_div(R, num, prev);
                if (!q) throw error("determinant: Bareiss division failed");
                w.at(i, j) = *q;
            }
        prev = w.at(k, k);
    }
    RingElem d = w.at(n - 1, n - 1);
    return neg ? -d : d;
}

bool is_unimodular(const Mat& A) {
    if (A.rows() != A.cols()) return false;
    return is_unit(A.ring(), determinant(A));
}

}  // namespace gk
