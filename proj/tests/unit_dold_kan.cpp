#include <doctest.h>

#include "pcx/dold_kan.hpp"
#include "pcx/errors.hpp"
#include "support/gen.hpp"

using namespace pcx;

namespace {

Complex single(const RingPtr& r, int degree, std::size_t rank = 1)
{
    return Complex(r, degree, degree, {{degree, rank}}, {});
}

} // namespace

TEST_CASE("level ranks count surjections")
{
    auto QQ = Ring::rationals();

    // constant simplicial object on k in degree 0
    DKTruncation dk0(single(QQ, 0));
    for (int n = 0; n <= DKTruncation::max_level; ++n)
        CHECK(dk0.level_rank(n) == 1);

    // k in degree -1: ranks 0, 1, 2, 3 (surjections [n] ->> [1])
    DKTruncation dk1(single(QQ, -1));
    CHECK(dk1.level_rank(0) == 0);
    CHECK(dk1.level_rank(1) == 1);
    CHECK(dk1.level_rank(2) == 2);
    CHECK(dk1.level_rank(3) == 3);

    // k in degree -2: C(n, 2)
    DKTruncation dk2(single(QQ, -2));
    CHECK(dk2.level_rank(0) == 0);
    CHECK(dk2.level_rank(1) == 0);
    CHECK(dk2.level_rank(2) == 1);
    CHECK(dk2.level_rank(3) == 3);

    // zero complex
    DKTruncation dkz(Complex::zero(QQ, -1, 0));
    for (int n = 0; n <= DKTruncation::max_level; ++n)
        CHECK(dkz.level_rank(n) == 0);

    // positive degrees are cut away by the truncation
    DKTruncation dkpos(single(QQ, 2));
    for (int n = 0; n <= DKTruncation::max_level; ++n)
        CHECK(dkpos.level_rank(n) == 0);
}

TEST_CASE("simplicial identities hold exactly on random complexes")
{
    std::vector<RingPtr> rings{Ring::rationals(), Ring::prime_field(5)};
    for (const auto& ring : rings) {
        testgen::Gen gen(ring, 103);
        for (int i = 0; i < 10; ++i) {
            Complex c = gen.complex(-3, 3, 2).complex;
            // the constructor re-checks every identity and throws on failure
            CHECK_NOTHROW(DKTruncation{c});
        }
    }
}

TEST_CASE("degeneracies split faces explicitly at low levels")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 107);
    Complex c = gen.complex(-3, 3, 2).complex;
    DKTruncation dk(c);
    // d_j s_j = id = d_(j+1) s_j spot check at level 1 -> 2 -> 1
    for (int j = 0; j <= 1; ++j) {
        CHECK(dk.face(2, j) * dk.degeneracy(1, j) == Matrix::identity(QQ, dk.level_rank(1)));
        CHECK(dk.face(2, j + 1) * dk.degeneracy(1, j) ==
              Matrix::identity(QQ, dk.level_rank(1)));
    }
}

TEST_CASE("dk_pi equals cohomology in nonpositive degrees")
{
    auto QQ = Ring::rationals();
    CHECK(dk_pi(single(QQ, 0), 0) == 1);
    CHECK(dk_pi(single(QQ, 0), 1) == 0);
    CHECK(dk_pi(single(QQ, 0), 2) == 0);

    CHECK(dk_pi(single(QQ, -2), 0) == 0);
    CHECK(dk_pi(single(QQ, -2), 1) == 0);
    CHECK(dk_pi(single(QQ, -2), 2) == 1);

    // acyclic complex
    std::map<int, std::size_t> ranks{{-1, 1}, {0, 1}};
    std::map<int, Matrix> diffs;
    Matrix one(QQ, 1, 1);
    one.set(0, 0, Scalar::one(QQ));
    diffs[-1] = one;
    Complex acyclic(QQ, -1, 0, ranks, diffs);
    for (int k = 0; k <= 2; ++k)
        CHECK(dk_pi(acyclic, k) == 0);
}

TEST_CASE("Dold-Kan correspondence on a random corpus")
{
    std::vector<RingPtr> rings{Ring::rationals(), Ring::prime_field(7)};
    for (const auto& ring : rings) {
        testgen::Gen gen(ring, 109);
        for (int i = 0; i < 20; ++i) {
            auto built = gen.complex(-3, 3, 2);
            auto dims = cohomology_dims(built.complex);
            DKTruncation dk(built.complex);
            for (int k = 0; k <= 2; ++k) {
                std::size_t expected = dims.count(-k) ? dims.at(-k) : 0;
                CHECK(dk.moore_homology_dim(k) == expected);
            }
        }
    }
}

TEST_CASE("Dold-Kan over a rational function field")
{
    auto K = Ring::rational_functions(Ring::rationals(), {"u"});
    std::map<int, std::size_t> ranks{{-1, 2}, {0, 2}};
    std::map<int, Matrix> diffs;
    Matrix d(K, 2, 2);
    d.set(0, 0, Scalar::variable(K, 0));
    d.set(0, 1, Scalar::one(K));
    diffs[-1] = d;
    Complex c(K, -1, 0, ranks, diffs);
    auto dims = cohomology_dims(c);
    DKTruncation dk(c);
    for (int k = 0; k <= 2; ++k)
        CHECK(dk.moore_homology_dim(k) == (dims.count(-k) ? dims.at(-k) : 0));

    auto P = Ring::polynomial(Ring::rationals(), {"x"});
    CHECK_THROWS_AS(dk_pi(Complex::zero(P, 0, 0), 0), Error);
}

TEST_CASE("Moore complex of the truncation recovers the truncated modules")
{
    auto QQ = Ring::rationals();
    testgen::Gen gen(QQ, 113);
    for (int i = 0; i < 10; ++i) {
        Complex c = gen.complex(-3, 3, 2).complex;
        DKTruncation dk(c);
        for (int n = 0; n <= DKTruncation::max_level; ++n)
            CHECK(dk.moore_rank(n) == dk.base().rank_at(-n));
    }
}
