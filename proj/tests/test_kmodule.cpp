#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/kmodule.hpp"
#include "test_models.hpp"

using namespace gk;
using namespace gk::testutil;

namespace {

const BaseRing ZZ = BaseRing::integers();
const BaseRing QQ = BaseRing::rationals();

Mat col_i64(const BaseRing& R, std::vector<long> v) {
    Mat m(R, static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = RingElem(v[i]);
    return m;
}

// all graded sublattices a0 Z v2 + a1 Z v0 + a2 Z v-2 with a_i | index bound
std::vector<Lattice> graded_sublattices_rank3(const BaseRing& R, int bound) {
    std::vector<Lattice> out;
    for (int a0 = 1; a0 <= bound; ++a0)
        for (int a1 = 1; a1 <= bound; ++a1)
            for (int a2 = 1; a2 <= bound; ++a2) {
                Mat g(R, 3, 3);
                g.at(0, 0) = RingElem(a0);
                g.at(1, 1) = RingElem(a1);
                g.at(2, 2) = RingElem(a2);
                out.push_back(Lattice::span(R, R, g));
            }
    return out;
}

bool stable_under_ops(const KModule& V, const Lattice& L) {
    for (const Mat& T : comodule_operators(V))
        if (!L.coords_of(T * L.basis()).has_value()) return false;
    return true;
}

}  // namespace

TEST_CASE("generated subcomodule: Ex 2.1.7 integral form from the highest weight vector") {
    for (int n = 1; n <= 4; ++n) {
        KModule Vq = weyl_lattice(n, QQ);
        Mat top(QQ, n + 1, 1);
        top.at(0, 0) = RingElem(1);
        Sublattice S = generated_subcomodule(Vq, top, ZZ);
        CHECK(S.lat.rank() == n + 1);
        // the integral form is exactly the standard lattice in these coordinates
        CHECK(S.lat == Lattice::span(ZZ, QQ, Mat::identity(QQ, n + 1)));
        KModule M = restrict_kmodule(Vq, S.lat, "w");
        REQUIRE(M.rank() == n + 1);
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                RingElem ewant = (j >= 1 && i == j - 1) ? RingElem(n - j + 1) : RingElem(0);
                RingElem fwant = (i == j + 1) ? RingElem(j + 1) : RingElem(0);
                CHECK(M.ops[0].e.at(i, j) == ewant);
                CHECK(M.ops[0].f.at(i, j) == fwant);
            }
        }
    }
}

TEST_CASE("generated subcomodule: trivial cases and torus components") {
    KModule V2 = weyl_lattice(2);
    Sublattice zero = generated_subcomodule(V2, Mat(ZZ, 3, 0));
    CHECK(zero.lat.rank() == 0);

    // torus: a vector's weight components are each contained in <v>
    KModule T = KModule::torus(ZZ, {"va", "vb"}, {{1}, {2}});
    Sublattice S = generated_subcomodule(T, col_i64(ZZ, {1, 2}));
    Mat want(ZZ, 2, 2);
    want.at(0, 0) = RingElem(1);
    want.at(1, 1) = RingElem(2);
    CHECK(S.lat == Lattice::span(ZZ, ZZ, want));
}

TEST_CASE("generated subcomodule: idempotence and monotonicity") {
    Rng rng(211);
    for (int it = 0; it < 25; ++it) {
        KModule V = random_sl2_kmodule(rng, ZZ, 5);
        Mat g = random_mat(rng, ZZ, V.rank(), 2, 3);
        Sublattice S = generated_subcomodule(V, g);
        Sublattice S2 = generated_subcomodule(V, S.lat.basis());
        CHECK(S2.lat == S.lat);
        Mat g2 = Mat::hcat(g, random_mat(rng, ZZ, V.rank(), 1, 3));
        Sublattice bigger = generated_subcomodule(V, g2);
        CHECK(bigger.lat.contains(S.lat));
    }
}

TEST_CASE("maximal subcomodule: frozen examples") {
    KModule V2 = weyl_lattice(2);
    // V0 = V gives V
    Sublattice whole = maximal_subcomodule(V2, Lattice::full(ZZ, ZZ, 3));
    CHECK(whole.lat == Lattice::full(ZZ, ZZ, 3));

    // torus: no nonzero graded sublattice inside the line Z(va+vb)
    KModule T = KModule::torus(ZZ, {"va", "vb"}, {{1}, {2}});
    Sublattice z = maximal_subcomodule(T, Lattice::span(ZZ, ZZ, col_i64(ZZ, {1, 1})));
    CHECK(z.lat.rank() == 0);

    // V0 = Z v2 + Z v0 + 2Z v-2 -> 2Z v2 + Z v0 + 2Z v-2
    Mat v0g(ZZ, 3, 3);
    v0g.at(0, 0) = RingElem(1);
    v0g.at(1, 1) = RingElem(1);
    v0g.at(2, 2) = RingElem(2);
    Sublattice m = maximal_subcomodule(V2, Lattice::span(ZZ, ZZ, v0g));
    Mat wantg(ZZ, 3, 3);
    wantg.at(0, 0) = RingElem(2);
    wantg.at(1, 1) = RingElem(1);
    wantg.at(2, 2) = RingElem(2);
    Lattice want = Lattice::span(ZZ, ZZ, wantg);
    CHECK(m.lat == want);

    // exhaustive-search oracle over graded sublattices of index divisor <= 4
    Lattice V0 = Lattice::span(ZZ, ZZ, v0g);
    Lattice best = Lattice::zero(ZZ, ZZ, 3);
    for (const Lattice& L : graded_sublattices_rank3(ZZ, 4))
        if (V0.contains(L) && stable_under_ops(V2, L)) best = best.sum(L);
    CHECK(best == want);
}

TEST_CASE("maximal subcomodule: maximality against randomized search") {
    Rng rng(223);
    KModule V2 = weyl_lattice(2);
    std::uniform_int_distribution<int> scale(1, 6);
    for (int it = 0; it < 20; ++it) {
        Mat g(ZZ, 3, 3);
        g.at(0, 0) = RingElem(scale(rng));
        g.at(1, 1) = RingElem(scale(rng));
        g.at(2, 2) = RingElem(scale(rng));
        Lattice V0 = Lattice::span(ZZ, ZZ, g);
        Sublattice M = maximal_subcomodule(V2, V0);
        CHECK(V0.contains(M.lat));
        CHECK(stable_under_ops(V2, M.lat));
        // every stable graded sublattice inside V0 sits inside M
        for (const Lattice& L : graded_sublattices_rank3(ZZ, 6))
            if (V0.contains(L) && stable_under_ops(V2, L)) CHECK(M.lat.contains(L));
    }
}

TEST_CASE("maximal subcomodule: monotone in V0") {
    Rng rng(227);
    KModule V = weyl_lattice(3);
    for (int it = 0; it < 10; ++it) {
        Mat g = random_mat(rng, ZZ, 4, 3, 4);
        Lattice small = Lattice::span(ZZ, ZZ, g);
        Lattice big = small.sum(Lattice::span(ZZ, ZZ, random_mat(rng, ZZ, 4, 1, 4)));
        Sublattice ms = maximal_subcomodule(V, small);
        Sublattice mb = maximal_subcomodule(V, big);
        CHECK(mb.lat.contains(ms.lat));
    }
}

TEST_CASE("invariants") {
    KModule triv = KModule::trivial(ZZ, {"a", "b", "c"});
    CHECK(invariants_K(triv).lat == Lattice::full(ZZ, ZZ, 3));

    // Ex 2.1.7 with n = 2: weight-0 part is Z v0 but E v0 = 2 v2 != 0
    CHECK(invariants_K(weyl_lattice(2)).lat.rank() == 0);

    KModule T = KModule::torus(ZZ, {"va", "v0"}, {{3}, {0}});
    Lattice inv = invariants_K(T).lat;
    REQUIRE(inv.rank() == 1);
    CHECK(inv.contains_vec(col_i64(ZZ, {0, 1})));
}

TEST_CASE("internal hom and duals") {
    KModule V2 = weyl_lattice(2);
    KModule D = dual_K(V2);
    REQUIRE(D.rank() == 3);
    // dual weights are negated
    std::multiset<long long> got, want{2, 0, -2};
    for (const auto& w : D.weights) got.insert(-w[0]);
    CHECK(got == want);

    // invariants of F(V,V) = Z . id
    KModule H = internal_hom_K(V2, V2);
    Lattice inv = invariants_K(H).lat;
    REQUIRE(inv.rank() == 1);
    Mat idvec(ZZ, 9, 1);
    for (int i = 0; i < 3; ++i) idvec.at(i * 3 + i, 0) = RingElem(1);
    CHECK(inv.contains_vec(idvec));

    // torus: Hom(Z_a, Z_b) has weight b - a
    KModule Za = KModule::torus(ZZ, {"x"}, {{5}});
    KModule Zb = KModule::torus(ZZ, {"y"}, {{2}});
    KModule Hab = internal_hom_K(Za, Zb);
    CHECK(Hab.weights[0][0] == -3);
    CHECK(invariants_K(Hab).lat.rank() == 0);
    CHECK(invariants_K(internal_hom_K(Za, Za)).lat.rank() == 1);
}

TEST_CASE("Cor 3.2.9: invariants of internal hom compute Hom_K") {
    Rng rng(229);
    int instances = 0;
    for (int it = 0; it < 60; ++it) {
        KModule V = random_torus_kmodule(rng, ZZ, 6);
        KModule W = random_torus_kmodule(rng, ZZ, 6);
        Lattice a = invariants_K(internal_hom_K(V, W)).lat;
        Lattice b = hom_K_by_kernel(V, W);
        CHECK(a == b);
        ++instances;
    }
    for (int it = 0; it < 50; ++it) {
        KModule V = random_sl2_kmodule(rng, ZZ, 6);
        KModule W = random_sl2_kmodule(rng, ZZ, 6);
        Lattice a = invariants_K(internal_hom_K(V, W)).lat;
        Lattice b = hom_K_by_kernel(V, W);
        CHECK(a == b);
        ++instances;
    }
    CHECK(instances >= 100);
}

TEST_CASE("double dual is canonically the original") {
    Rng rng(233);
    for (int it = 0; it < 10; ++it) {
        KModule V = random_sl2_kmodule(rng, ZZ, 5);
        KModule DD = dual_K(dual_K(V));
        REQUIRE(DD.rank() == V.rank());
        CHECK(DD.weights == V.weights);
        CHECK(DD.ops[0].e == V.ops[0].e);
        CHECK(DD.ops[0].f == V.ops[0].f);
    }
}

TEST_CASE("base change of encodings") {
    KModule V2 = weyl_lattice(2);
    auto zq = RingMap::make(ZZ, QQ);
    KModule Vq = base_change(zq, V2);
    CHECK(Vq.ring == QQ);
    CHECK(validate_kmodule(Vq).ok);
    auto zi = RingMap::make(ZZ, BaseRing::gaussian());
    KModule Vi = base_change(zi, V2);
    CHECK(validate_kmodule(Vi).ok);
}
