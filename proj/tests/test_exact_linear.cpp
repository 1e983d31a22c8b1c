#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/lattice.hpp"
#include "gk/snf.hpp"
#include "test_util.hpp"

using namespace gk;
using namespace gk::testutil;

namespace {

Mat mat_i64(const BaseRing& R, std::vector<std::vector<long>> rows) {
    Mat A(R, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) A.at(static_cast<int>(i), static_cast<int>(j)) = RingElem(rows[i][j]);
    return A;
}

const BaseRing ZZ = BaseRing::integers();
const BaseRing QQ = BaseRing::rationals();
const BaseRing Z2 = BaseRing::localized({2});
const BaseRing ZI = BaseRing::gaussian();

// Chevalley-Eilenberg d^1 of sl2 with trivial coefficients, columns
// d(e*), d(h*), d(f*) in the basis ((e^h)*, (e^f)*, (h^f)*).
Mat sl2_ce_d1() { return mat_i64(ZZ, {{2, 0, 0}, {0, -1, 0}, {0, 0, 2}}); }

}  // namespace

TEST_CASE("ring element basics") {
    CHECK(in_ring(ZZ, RingElem(5)));
    CHECK_FALSE(in_ring(ZZ, RingElem(mpq_class(1, 2))));
    CHECK(in_ring(Z2, RingElem(mpq_class(3, 4))));
    CHECK_FALSE(in_ring(Z2, RingElem(mpq_class(1, 3))));
    CHECK(in_ring(ZI, RingElem(mpq_class(2), mpq_class(-3))));
    CHECK_FALSE(in_ring(ZI, RingElem(mpq_class(1, 2), mpq_class(0))));

    CHECK(is_unit(Z2, RingElem(mpq_class(4))));
    CHECK(is_unit(Z2, RingElem(mpq_class(1, 8))));
    CHECK_FALSE(is_unit(Z2, RingElem(3)));
    CHECK(is_unit(ZI, RingElem(mpq_class(0), mpq_class(-1))));
    CHECK_FALSE(is_unit(ZI, RingElem(mpq_class(1), mpq_class(1))));

    // Gaussian gcd: gcd(1+i, 2) is 1+i up to units (2 = -i (1+i)^2)
    RingElem g = ring_gcd(ZI, RingElem(mpq_class(1), mpq_class(1)), RingElem(2));
    CHECK(g == canonical_associate(ZI, RingElem(mpq_class(1), mpq_class(1))));

    CHECK(parse_ring_elem("3/2-i") == RingElem(mpq_class(3, 2), mpq_class(-1)));
    CHECK(parse_ring_elem("-4/6") == RingElem(mpq_class(-2, 3)));
    CHECK(parse_ring_elem("i") == RingElem(mpq_class(0), mpq_class(1)));
}

TEST_CASE("divmod shrinks remainders") {
    Rng rng(7);
    for (const BaseRing& R : {ZZ, Z2, ZI, QQ}) {
        for (int it = 0; it < 200; ++it) {
            RingElem a = random_elem(rng, R), b = random_elem(rng, R);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(R, a, b);
            CHECK(in_ring(R, q));
            CHECK(in_ring(R, r));
            CHECK(a == q * b + r);
            if (!r.is_zero()) CHECK(euclid_size(R, r) < euclid_size(R, b));
        }
    }
}

TEST_CASE("smith normal form: frozen examples") {
    // d1 = gcd of entries = 2, d1 d2 = gcd of 2x2 minors = 8
    auto s = smith_normal_form(mat_i64(ZZ, {{2, 4}, {6, 8}}));
    REQUIRE(s.rank == 2);
    CHECK(s.D.at(0, 0) == RingElem(2));
    CHECK(s.D.at(1, 1) == RingElem(4));

    auto z = smith_normal_form(Mat::zero(ZZ, 3, 2));
    CHECK(z.rank == 0);
    CHECK(z.D.is_zero());

    auto id = smith_normal_form(Mat::identity(ZZ, 4));
    CHECK(id.rank == 4);
    for (const auto& d : id.divisors()) CHECK(is_unit(ZZ, d));

    auto ce = smith_normal_form(sl2_ce_d1());
    auto ds = ce.divisors();
    REQUIRE(ds.size() == 3);
    CHECK(ds[0] == RingElem(1));
    CHECK(ds[1] == RingElem(2));
    CHECK(ds[2] == RingElem(2));
}

TEST_CASE("smith normal form: reconstruction + divisor chain, all rings") {
    Rng rng(11);
    for (const BaseRing& R : {ZZ, QQ, Z2, ZI}) {
        for (int it = 0; it < 60; ++it) {
            std::uniform_int_distribution<int> dim(0, 8);
            Mat A = random_mat(rng, R, dim(rng), dim(rng));
            auto s = smith_normal_form(A);
            CHECK(s.U * s.D * s.V == A);
            CHECK(s.U * s.U_inv == Mat::identity(R, A.rows()));
            CHECK(s.V * s.V_inv == Mat::identity(R, A.cols()));
            CHECK(is_unimodular(s.U));
            CHECK(is_unimodular(s.V));
            auto ds = s.divisors();
            for (size_t k = 0; k + 1 < ds.size(); ++k)
                CHECK(exact_div(R, ds[k + 1], ds[k]).has_value());
            for (const auto& d : ds) CHECK(d == canonical_associate(R, d));
            // off-diagonal zero
            for (int i = 0; i < s.D.rows(); ++i)
                for (int j = 0; j < s.D.cols(); ++j)
                    if (i != j) CHECK(s.D.at(i, j).is_zero());
        }
    }
}

TEST_CASE("smith normal form agrees with gcd-of-minors oracle") {
    Rng rng(13);
    for (const BaseRing& R : {ZZ, Z2, ZI}) {
        for (int it = 0; it < 30; ++it) {
            std::uniform_int_distribution<int> dim(1, 5);
            Mat A = random_mat(rng, R, dim(rng), dim(rng), 9);
            auto got = canonical_divisors(R, smith_normal_form(A).divisors());
            auto want = divisors_by_minor_gcd(A);
            REQUIRE(got.size() == want.size());
            for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == want[k]);
        }
    }
}

TEST_CASE("kernel basis") {
    Mat A = mat_i64(ZZ, {{1, 1}});
    Mat K = kernel_basis(A);
    REQUIRE(K.cols() == 1);
    CHECK((A * K).is_zero());
    bool plus = K.at(0, 0) == RingElem(1) && K.at(1, 0) == RingElem(-1);
    bool minus = K.at(0, 0) == RingElem(-1) && K.at(1, 0) == RingElem(1);
    CHECK((plus || minus));

    CHECK(kernel_basis(Mat::identity(ZZ, 3)).cols() == 0);
    CHECK(kernel_basis(sl2_ce_d1()).cols() == 0);  // divisors (1,2,2): full column rank
}

TEST_CASE("kernel is a saturated direct summand") {
    Rng rng(17);
    for (const BaseRing& R : {ZZ, Z2, ZI}) {
        for (int it = 0; it < 40; ++it) {
            std::uniform_int_distribution<int> dim(1, 7);
            Mat A = random_mat(rng, R, dim(rng), dim(rng));
            Mat K = kernel_basis(A);
            CHECK((A * K).is_zero());
            if (K.cols() > 0)
                for (const auto& d : smith_normal_form(K).divisors()) CHECK(is_unit(R, d));
        }
    }
}

TEST_CASE("cokernel invariants") {
    auto c = cokernel_invariants(mat_i64(ZZ, {{2}}));
    CHECK(c.free_rank == 0);
    REQUIRE(c.torsion.size() == 1);
    CHECK(c.torsion[0] == RingElem(2));

    auto ci = cokernel_invariants(Mat::identity(ZZ, 5));
    CHECK(ci.free_rank == 0);
    CHECK(ci.torsion.empty());

    auto ce = cokernel_invariants(sl2_ce_d1());
    CHECK(ce.free_rank == 0);
    REQUIRE(ce.torsion.size() == 2);
    CHECK(ce.torsion[0] == RingElem(2));
    CHECK(ce.torsion[1] == RingElem(2));
}

TEST_CASE("apply_ring_map") {
    Mat two = mat_i64(ZZ, {{2}});
    auto idm = RingMap::identity(ZZ);
    CHECK(apply_ring_map(idm, two) == two);

    auto zq = RingMap::make(ZZ, QQ);
    Mat twoq = apply_ring_map(zq, two);
    auto cq = cokernel_invariants(twoq);
    CHECK(cq.free_rank == 0);
    CHECK(cq.torsion.empty());  // 2 is a unit in QQ

    auto zi = RingMap::make(ZZ, ZI);
    auto czi = cokernel_invariants(apply_ring_map(zi, two));
    CHECK(czi.free_rank == 0);
    REQUIRE(czi.torsion.size() == 1);
    CHECK(czi.torsion[0] == RingElem(2));  // 2 is not a unit in ZZ[i]

    CHECK_THROWS_AS((void)RingMap::make(QQ, ZZ), error);
}

TEST_CASE("flat maps commute with SNF up to units") {
    Rng rng(19);
    std::vector<RingMap> maps = {RingMap::make(ZZ, QQ), RingMap::make(ZZ, Z2),
                                 RingMap::make(Z2, QQ), RingMap::make(ZZ, ZI)};
    for (const auto& f : maps) {
        for (int it = 0; it < 25; ++it) {
            std::uniform_int_distribution<int> dim(1, 6);
            Mat A = random_mat(rng, f.source, dim(rng), dim(rng));
            auto ds = smith_normal_form(A).divisors();
            auto dt = smith_normal_form(apply_ring_map(f, A)).divisors();
            std::vector<RingElem> expect;
            for (const auto& d : ds) {
                RingElem img = canonical_associate(f.target, f.apply(d));
                if (!is_unit(f.target, img)) expect.push_back(img);
            }
            std::vector<RingElem> got;
            for (const auto& d : dt)
                if (!is_unit(f.target, d)) got.push_back(canonical_associate(f.target, d));
            REQUIRE(got.size() == expect.size());
            for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == expect[k]);
        }
    }
}

TEST_CASE("solve_columns") {
    Rng rng(23);
    for (const BaseRing& R : {ZZ, Z2, ZI}) {
        for (int it = 0; it < 30; ++it) {
            std::uniform_int_distribution<int> dim(1, 6);
            int m = dim(rng), n = dim(rng), k = dim(rng);
            Mat A = random_mat(rng, R, m, n);
            Mat X = random_mat(rng, R, n, k, 5);
            Mat B = A * X;
            auto Y = solve_columns(A, B);
            REQUIRE(Y.has_value());
            CHECK(A * *Y == B);
        }
    }
    // insolvable instance
    CHECK_FALSE(solve_columns(mat_i64(ZZ, {{2}}), mat_i64(ZZ, {{1}})).has_value());
}

TEST_CASE("lattice spans and hermite canonicity") {
    Rng rng(29);
    for (const BaseRing& R : {ZZ, Z2, ZI, QQ}) {
        for (int it = 0; it < 30; ++it) {
            std::uniform_int_distribution<int> dim(1, 5);
            int d = dim(rng), k = dim(rng);
            Mat A = random_mat(rng, R, d, k, 8);
            Lattice L = Lattice::span(R, A);
            // span is invariant under random unimodular column mixing
            Mat B = A;
            std::uniform_int_distribution<int> pick(0, k - 1);
            for (int s = 0; s < 5; ++s) {
                int i = pick(rng), j = pick(rng);
                if (i == j) continue;
                RingElem c = random_elem(rng, R, 3);
                for (int t = 0; t < d; ++t) B.at(t, i) += c * B.at(t, j);
            }
            CHECK(Lattice::span(R, B) == L);
            for (int j = 0; j < A.cols(); ++j) CHECK(L.contains_vec(A.col(j)));
        }
    }
}

TEST_CASE("lattice sum, intersection, constrained sublattice") {
    Mat e1 = mat_i64(ZZ, {{2}, {0}});
    Mat e2 = mat_i64(ZZ, {{0}, {3}});
    Lattice L1 = Lattice::span(ZZ, e1);
    Lattice L2 = Lattice::span(ZZ, e2);
    Lattice S = L1.sum(L2);
    CHECK(S.rank() == 2);
    CHECK(S.contains(L1));
    CHECK(S.contains(L2));
    Lattice I = L1.intersect(L2);
    CHECK(I.rank() == 0);

    // {v in ZZ^2 : swap(v) in L} for L = ZZ(1,0) + 2ZZ(0,1)
    Lattice L = Lattice::span(ZZ, mat_i64(ZZ, {{1, 0}, {0, 2}}));
    Mat swp = mat_i64(ZZ, {{0, 1}, {1, 0}});
    Lattice C = constrained_sublattice(Lattice::full(ZZ, ZZ, 2), {swp}, {L});
    CHECK(C == Lattice::span(ZZ, mat_i64(ZZ, {{2, 0}, {0, 1}})));
}

TEST_CASE("integral lattices inside rational spaces") {
    // ZZ-span of (1/2, 1) and (0, 3) inside QQ^2
    Mat gens(QQ, 2, 2);
    gens.at(0, 0) = RingElem(mpq_class(1, 2));
    gens.at(1, 0) = RingElem(1);
    gens.at(1, 1) = RingElem(3);
    Lattice L = Lattice::span(BaseRing::integers(), QQ, gens);
    CHECK(L.rank() == 2);
    Mat v(QQ, 2, 1);
    v.at(0, 0) = RingElem(mpq_class(1, 2));
    v.at(1, 0) = RingElem(4);
    CHECK(L.contains_vec(v));
    v.at(0, 0) = RingElem(mpq_class(1, 4));
    CHECK_FALSE(L.contains_vec(v));

    Lattice doubled = L.scaled(RingElem(2));
    CHECK(L.contains(doubled));
    CHECK_FALSE(doubled.contains(L));
    auto divs = relative_divisors(doubled, L);
    REQUIRE(divs.size() == 2);
    CHECK(divs[0] == RingElem(2));
    CHECK(divs[1] == RingElem(2));
}
